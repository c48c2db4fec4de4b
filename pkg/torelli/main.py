from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from torelli.api.routes import action, batch, braids, words
from torelli.config import ALLOWED_ORIGINS, API_HOST, API_PORT, API_VERSION, configure_logging

configure_logging()

# Inicializar FastAPI
app = FastAPI(
    title="Torelli API",
    description="ε, escisión, factorización del núcleo, acción en homología relativa y Burau en t = -1",
    version=API_VERSION
)

# Configurar CORS
app.add_middleware(
    CORSMiddleware,
    allow_origins=ALLOWED_ORIGINS,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Incluir routers
app.include_router(words.router, prefix="/api", tags=["Palabras"])
app.include_router(braids.router, prefix="/api", tags=["Trenzas"])
app.include_router(action.router, prefix="/api", tags=["Acción"])
app.include_router(batch.router, prefix="/api", tags=["Lotes"])


@app.get("/")
def root():
    return {
        "success": True,
        "message": "API de la sucesión de Birman para Torelli hiperelíptico",
        "version": API_VERSION,
        "endpoints": {
            "docs": "/docs",
            "palabras": "/api/words/{reduce,eps,split,kernel,factor,schreier,enum}",
            "trenzas": "/api/braids/{burau,eval,perm,kernel,center}",
            "accion": "/api/action/{matrix,fix}",
            "exportar": "/api/batch/exportar",
            "importar": "/api/batch/importar",
            "plantilla": "/api/batch/plantilla"
        }
    }


@app.get("/health")
def health_check():
    return {
        "status": "healthy",
        "version": API_VERSION
    }


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(app, host=API_HOST, port=API_PORT)
