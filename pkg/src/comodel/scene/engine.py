"""Scene graph and its mutation operations.

Objects are never deleted: "removing" something means parking it at
x >= 1000 with ``hidden=True``, which keeps session history replayable.
Every successful mutation bumps ``Scene.revision`` by exactly one and
notifies observers with the changed object, which is what the sync
protocol fans out as deltas.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from threading import RLock
from typing import Callable, Optional

from .meshgen import expected_vertex_count, generate_mesh
from .types import (
    HIDDEN_X_THRESHOLD,
    MaterialSpec,
    Primitive,
    SceneObject,
    Transform,
    UnknownObject,
    Vec3,
    validate_name,
    validate_primitive,
)

# observer signature: (revision, changed SceneObject) -> None
Observer = Callable[[int, SceneObject], None]


@dataclass
class Scene:
    objects: dict[str, SceneObject] = field(default_factory=dict)
    revision: int = 0
    _observers: list[Observer] = field(default_factory=list, compare=False, repr=False)

    def subscribe(self, observer: Observer) -> None:
        self._observers.append(observer)

    def unsubscribe(self, observer: Observer) -> None:
        if observer in self._observers:
            self._observers.remove(observer)

    def _committed(self, obj: SceneObject) -> None:
        self.revision += 1
        for observer in list(self._observers):
            observer(self.revision, obj)

    def visible_objects(self) -> list[SceneObject]:
        return [o for o in self.objects.values() if not o.hidden]


def upsert_object(
    scene: Scene,
    name: str,
    primitive: Primitive,
    transform: Transform = Transform(),
    material: Optional[MaterialSpec] = None,
) -> SceneObject:
    """Create ``name`` or replace its primitive/transform/material in place.

    Never deletes or renames anything. The hidden state survives the
    update: when the target is parked, the incoming translation is
    re-parked past the x >= 1000 threshold.
    """
    validate_name(name)
    validate_primitive(primitive)
    transform.validate()
    if material is not None:
        material.validate()

    existing = scene.objects.get(name)
    if existing is not None:
        if existing.hidden and transform.translation[0] < HIDDEN_X_THRESHOLD:
            t = transform.translation
            transform = replace(transform, translation=(t[0] + 1000.0, t[1], t[2]))
        existing.primitive = primitive
        existing.transform = transform
        if material is not None:
            existing.material = material
        existing.hidden = transform.translation[0] >= HIDDEN_X_THRESHOLD
        scene._committed(existing)
        return existing

    obj = SceneObject(
        name=name,
        primitive=primitive,
        transform=transform,
        material=material if material is not None else MaterialSpec(),
        hidden=transform.translation[0] >= HIDDEN_X_THRESHOLD,
    )
    scene.objects[name] = obj
    scene._committed(obj)
    return obj


def hide_object(scene: Scene, name: str) -> SceneObject:
    """Park ``name`` out of frame (x += 1000) instead of deleting it."""
    obj = _get(scene, name)
    t = obj.transform.translation
    if t[0] < HIDDEN_X_THRESHOLD:
        obj.transform = replace(obj.transform, translation=(t[0] + 1000.0, t[1], t[2]))
    obj.hidden = True
    scene._committed(obj)
    return obj


def show_object(scene: Scene, name: str) -> SceneObject:
    """Reverse of hide_object: shift back by 1000 and clear the flag."""
    obj = _get(scene, name)
    t = obj.transform.translation
    if t[0] >= HIDDEN_X_THRESHOLD:
        obj.transform = replace(obj.transform, translation=(t[0] - 1000.0, t[1], t[2]))
    obj.hidden = False
    scene._committed(obj)
    return obj


def _get(scene: Scene, name: str) -> SceneObject:
    obj = scene.objects.get(name)
    if obj is None:
        raise UnknownObject(f"no object named {name!r} in scene")
    return obj


def rotation_matrix(euler: Vec3) -> tuple[Vec3, Vec3, Vec3]:
    """Row-major rotation for XYZ euler angles (X applied first)."""
    cx, sx = math.cos(euler[0]), math.sin(euler[0])
    cy, sy = math.cos(euler[1]), math.sin(euler[1])
    cz, sz = math.cos(euler[2]), math.sin(euler[2])
    # Rz @ Ry @ Rx
    return (
        (cy * cz, sx * sy * cz - cx * sz, cx * sy * cz + sx * sz),
        (cy * sz, sx * sy * sz + cx * cz, cx * sy * sz - sx * cz),
        (-sy, sx * cy, cx * cy),
    )


def transform_point(transform: Transform, point: Vec3) -> Vec3:
    sx, sy, sz = transform.scale
    p = (point[0] * sx, point[1] * sy, point[2] * sz)
    m = rotation_matrix(transform.rotation_euler)
    rotated = (
        m[0][0] * p[0] + m[0][1] * p[1] + m[0][2] * p[2],
        m[1][0] * p[0] + m[1][1] * p[1] + m[1][2] * p[2],
        m[2][0] * p[0] + m[2][1] * p[1] + m[2][2] * p[2],
    )
    t = transform.translation
    return (rotated[0] + t[0], rotated[1] + t[1], rotated[2] + t[2])


def world_vertices(obj: SceneObject) -> list[Vec3]:
    mesh = generate_mesh(obj.primitive)
    return [transform_point(obj.transform, v) for v in mesh.vertices]


def world_bounds(obj: SceneObject) -> tuple[Vec3, Vec3]:
    """Axis-aligned bounding box (min corner, max corner) in world space."""
    verts = world_vertices(obj)
    xs, ys, zs = zip(*verts)
    return (min(xs), min(ys), min(zs)), (max(xs), max(ys), max(zs))


def get_object_info(scene: Scene, name: str) -> dict:
    obj = _get(scene, name)
    lo, hi = world_bounds(obj)
    return {
        "name": obj.name,
        "primitive": primitive_doc(obj.primitive),
        "transform": transform_doc(obj.transform),
        "material": material_doc(obj.material),
        "hidden": obj.hidden,
        "vertex_count": expected_vertex_count(obj.primitive),
        "world_bounds": {"min": list(lo), "max": list(hi)},
    }


def get_scene_info(scene: Scene) -> dict:
    visible = scene.visible_objects()
    return {
        "revision": scene.revision,
        "object_summaries": [
            {"name": o.name, "primitive_kind": o.primitive.kind, "hidden": o.hidden}
            for o in scene.objects.values()
        ],
        "visible_count": len(visible),
        "total_vertex_count": sum(expected_vertex_count(o.primitive) for o in visible),
    }


def primitive_doc(primitive: Primitive) -> dict:
    doc: dict = {"kind": primitive.kind}
    for key, value in vars(primitive).items():
        if key == "array":
            if value is not None:
                doc["array"] = {"count": value.count, "offset": list(value.offset)}
            continue
        doc[key] = value
    return doc


def transform_doc(transform: Transform) -> dict:
    return {
        "translation": list(transform.translation),
        "rotation_euler": list(transform.rotation_euler),
        "scale": list(transform.scale),
    }


def material_doc(material: MaterialSpec) -> dict:
    doc: dict = {"base_color": list(material.base_color)}
    if material.name is not None:
        doc["name"] = material.name
    return doc


def object_doc(obj: SceneObject) -> dict:
    return {
        "name": obj.name,
        "primitive": primitive_doc(obj.primitive),
        "transform": transform_doc(obj.transform),
        "material": material_doc(obj.material),
        "hidden": obj.hidden,
    }


class SceneHost:
    """Single-writer wrapper: all mutations of one scene are serialized
    through this lock; reads run under it and hand out plain documents.

    Observer callbacks fire while the lock is held, so the delta stream
    is totally ordered by revision; callbacks must therefore be quick
    and never re-enter the engine.
    """

    def __init__(self, scene: Optional[Scene] = None):
        self._lock = RLock()
        self.scene = scene if scene is not None else Scene()

    def mutate(self, fn):
        """Run ``fn(scene)`` under the writer lock; returns fn's result."""
        with self._lock:
            return fn(self.scene)

    def read(self, fn):
        with self._lock:
            return fn(self.scene)

    def subscribe(self, observer: Observer) -> None:
        with self._lock:
            self.scene.subscribe(observer)

    def unsubscribe(self, observer: Observer) -> None:
        with self._lock:
            self.scene.unsubscribe(observer)

    @property
    def revision(self) -> int:
        with self._lock:
            return self.scene.revision
