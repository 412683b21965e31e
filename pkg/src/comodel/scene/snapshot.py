"""Canonical scene snapshots.

The canonical form is UTF-8 JSON with alphabetically ordered keys, no
insignificant whitespace, ASCII escapes, and shortest round-trip float
formatting — byte equality of two snapshots implies scene equality.
The object array preserves scene insertion order (creation order is
part of scene state).
"""
from __future__ import annotations

import json
import math
from typing import Any, Union

from .engine import Scene, object_doc
from .types import (
    ArrayModifier,
    MalformedDocument,
    MaterialSpec,
    PRIMITIVE_KINDS,
    Primitive,
    SceneObject,
    Transform,
    validate_name,
    validate_primitive,
)


def canonical_json(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=True, allow_nan=False)


def snapshot_doc(scene: Scene) -> dict:
    return {
        "revision": scene.revision,
        "objects": [object_doc(obj) for obj in scene.objects.values()],
    }


def snapshot(scene: Scene) -> str:
    return canonical_json(snapshot_doc(scene))


def scene_equal(a: Scene, b: Scene) -> bool:
    return snapshot(a) == snapshot(b)


def _fail(message: str) -> None:
    raise MalformedDocument(message)


def _float3(value, where: str) -> tuple[float, float, float]:
    if not isinstance(value, list) or len(value) != 3:
        _fail(f"{where} must be an array of 3 numbers, got {value!r}")
    out = []
    for c in value:
        if isinstance(c, bool) or not isinstance(c, (int, float)) or not math.isfinite(c):
            _fail(f"{where} must contain finite numbers, got {value!r}")
        out.append(float(c))
    return (out[0], out[1], out[2])


def _as_int(value, where: str) -> int:
    if isinstance(value, bool):
        _fail(f"{where} must be an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, float) and value.is_integer():
        return int(value)
    _fail(f"{where} must be an integer, got {value!r}")
    raise AssertionError  # unreachable


def primitive_from_doc(doc) -> Primitive:
    if not isinstance(doc, dict) or "kind" not in doc:
        _fail(f"primitive document must carry a 'kind', got {doc!r}")
    kind = doc["kind"]
    cls = PRIMITIVE_KINDS.get(kind)
    if cls is None:
        _fail(f"unknown primitive kind {kind!r}")
    int_fields = {"segments", "rings", "subdivisions", "major_segments", "minor_segments"}
    kwargs = {}
    fields = {f for f in cls.__dataclass_fields__ if f != "array"}
    for key, value in doc.items():
        if key in ("kind", "array"):
            continue
        if key not in fields:
            _fail(f"unknown parameter {key!r} for primitive kind {kind!r}")
        if key in int_fields:
            kwargs[key] = _as_int(value, f"{kind}.{key}")
        else:
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                _fail(f"{kind}.{key} must be a number, got {value!r}")
            kwargs[key] = float(value)
    array_doc = doc.get("array")
    if array_doc is not None:
        if not isinstance(array_doc, dict):
            _fail(f"array modifier must be an object, got {array_doc!r}")
        kwargs["array"] = ArrayModifier(
            count=_as_int(array_doc.get("count"), "array.count"),
            offset=_float3(array_doc.get("offset", [0, 0, 0]), "array.offset"),
        )
    try:
        primitive = cls(**kwargs)
        validate_primitive(primitive)
    except MalformedDocument:
        raise
    except Exception as exc:
        _fail(f"invalid primitive parameters: {exc}")
    return primitive


def transform_from_doc(doc) -> Transform:
    if not isinstance(doc, dict):
        _fail(f"transform must be an object, got {doc!r}")
    t = Transform(
        translation=_float3(doc.get("translation", [0, 0, 0]), "transform.translation"),
        rotation_euler=_float3(doc.get("rotation_euler", [0, 0, 0]), "transform.rotation_euler"),
        scale=_float3(doc.get("scale", [1, 1, 1]), "transform.scale"),
    )
    try:
        t.validate()
    except Exception as exc:
        _fail(f"invalid transform: {exc}")
    return t


def material_from_doc(doc) -> MaterialSpec:
    if not isinstance(doc, dict):
        _fail(f"material must be an object, got {doc!r}")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        _fail(f"material.name must be a string, got {name!r}")
    m = MaterialSpec(base_color=_float3(doc.get("base_color", [0.8, 0.8, 0.8]), "material.base_color"), name=name)
    try:
        m.validate()
    except Exception as exc:
        _fail(f"invalid material: {exc}")
    return m


def object_from_doc(doc) -> SceneObject:
    if not isinstance(doc, dict):
        _fail(f"object document must be an object, got {doc!r}")
    name = doc.get("name")
    try:
        validate_name(name)
    except Exception:
        _fail(f"invalid object name {name!r}")
    hidden = doc.get("hidden", False)
    if not isinstance(hidden, bool):
        _fail(f"hidden must be a boolean, got {hidden!r}")
    return SceneObject(
        name=name,
        primitive=primitive_from_doc(doc.get("primitive")),
        transform=transform_from_doc(doc.get("transform", {})),
        material=material_from_doc(doc.get("material", {})),
        hidden=hidden,
    )


def restore(document: Union[str, bytes, dict]) -> Scene:
    """Rebuild a Scene from a snapshot document (text or parsed)."""
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            _fail(f"not valid JSON: {exc}")
    if not isinstance(document, dict):
        _fail(f"snapshot must be a JSON object, got {type(document).__name__}")
    revision = document.get("revision")
    if not isinstance(revision, int) or isinstance(revision, bool) or revision < 0:
        _fail(f"revision must be a non-negative integer, got {revision!r}")
    objects_doc = document.get("objects")
    if not isinstance(objects_doc, list):
        _fail(f"objects must be an array, got {objects_doc!r}")
    scene = Scene(revision=revision)
    for entry in objects_doc:
        obj = object_from_doc(entry)
        if obj.name in scene.objects:
            _fail(f"duplicate object name {obj.name!r}")
        scene.objects[obj.name] = obj
    return scene
