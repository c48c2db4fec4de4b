from hypothesis import settings

settings.register_profile("torelli", deadline=None)
settings.load_profile("torelli")
