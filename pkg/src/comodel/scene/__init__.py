from .types import (
    ArrayModifier,
    Cone,
    Cube,
    Cylinder,
    EngineError,
    HIDDEN_X_THRESHOLD,
    IcoSphere,
    InvalidName,
    InvalidPrimitiveParams,
    MalformedDocument,
    MaterialSpec,
    Plane,
    PRIMITIVE_KINDS,
    Primitive,
    SceneObject,
    Torus,
    Transform,
    UnknownObject,
    UvSphere,
    Vec3,
    validate_name,
    validate_primitive,
)
from .meshgen import Mesh, expected_vertex_count, generate_mesh
from .engine import (
    Scene,
    SceneHost,
    get_object_info,
    get_scene_info,
    hide_object,
    material_doc,
    object_doc,
    primitive_doc,
    rotation_matrix,
    show_object,
    transform_doc,
    transform_point,
    upsert_object,
    world_bounds,
    world_vertices,
)
from .snapshot import (
    canonical_json,
    material_from_doc,
    object_from_doc,
    primitive_from_doc,
    restore,
    scene_equal,
    snapshot,
    snapshot_doc,
    transform_from_doc,
)

__all__ = [name for name in dir() if not name.startswith("_")]
