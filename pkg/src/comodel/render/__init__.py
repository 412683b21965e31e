from .raster import (
    BACKGROUND,
    Camera,
    Image,
    InvalidDimensions,
    content_hash,
    decode_ppm,
    default_camera,
    encode_ppm,
    render,
    screenshot,
)

__all__ = [name for name in dir() if not name.startswith("_")]
