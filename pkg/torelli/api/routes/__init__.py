from torelli.api.routes import action, batch, braids, words

__all__ = ['action', 'batch', 'braids', 'words']
