"""Execute parsed command scripts against a scene.

Statements apply in order through the engine ops, one revision per
statement. Execution stops at the first failing statement and reports
it; earlier effects stay (no rollback, mirroring how partial edits
behave in interactive modeling sessions). Failures are data, never
exceptions escaping ``execute``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional

from ..scene import (
    EngineError,
    ArrayModifier,
    MaterialSpec,
    PRIMITIVE_KINDS,
    Primitive,
    Scene,
    Transform,
    UnknownObject,
    hide_object,
    show_object,
    upsert_object,
)
from .parser import ArgValue, BoolValue, Ident, Number, Script, Statement, Str, VecValue


class MissingArg(Exception):
    code = "missing_arg"

    def __init__(self, key: str):
        super().__init__(f"required argument {key!r} is missing")
        self.key = key


class InvalidArgValue(Exception):
    code = "invalid_arg"

    def __init__(self, key: str, expected: str, value: ArgValue):
        super().__init__(f"argument {key!r} must be {expected}, got {value!r}")
        self.key = key


@dataclass
class ExecReport:
    executed: int
    failed_at: Optional[dict]
    revision_before: int
    revision_after: int

    @property
    def ok(self) -> bool:
        return self.failed_at is None

    def to_doc(self) -> dict:
        return {
            "executed": self.executed,
            "failed_at": self.failed_at,
            "revision_before": self.revision_before,
            "revision_after": self.revision_after,
        }


# Primitive parameter vocabulary per kind; int-valued keys are coerced.
_PRIM_PARAMS: dict[str, tuple[str, ...]] = {
    "cube": ("size",),
    "plane": ("size",),
    "uv_sphere": ("segments", "rings", "radius"),
    "ico_sphere": ("subdivisions", "radius"),
    "cylinder": ("segments", "radius", "depth"),
    "cone": ("segments", "radius", "depth"),
    "torus": ("major_segments", "minor_segments", "major_radius", "minor_radius"),
}
_INT_PARAMS = {"segments", "rings", "subdivisions", "major_segments", "minor_segments"}


def _number(args: dict[str, ArgValue], key: str) -> Optional[float]:
    if key not in args:
        return None
    value = args[key]
    if not isinstance(value, Number):
        raise InvalidArgValue(key, "a number", value)
    return value.value


def _coerce_param(key: str, raw: float):
    if key in _INT_PARAMS and float(raw).is_integer():
        return int(raw)
    return raw


def _vec(args: dict[str, ArgValue], key: str, required: bool = False):
    if key not in args:
        if required:
            raise MissingArg(key)
        return None
    value = args[key]
    if not isinstance(value, VecValue):
        raise InvalidArgValue(key, "a vector (x,y,z)", value)
    return value.value


def _name(args: dict[str, ArgValue], key: str = "name") -> str:
    if key not in args:
        raise MissingArg(key)
    value = args[key]
    if isinstance(value, (Ident, Str)):
        return value.value
    raise InvalidArgValue(key, "an identifier or string", value)


def _string(args: dict[str, ArgValue], key: str) -> Optional[str]:
    if key not in args:
        return None
    value = args[key]
    if isinstance(value, (Ident, Str)):
        return value.value
    raise InvalidArgValue(key, "an identifier or string", value)


def _primitive_from_args(kind: str, args: dict[str, ArgValue], base: Optional[Primitive] = None) -> Primitive:
    cls = PRIMITIVE_KINDS[kind]
    allowed = _PRIM_PARAMS[kind]
    if base is not None and base.kind == kind:
        primitive = base
    else:
        primitive = cls()
        if base is not None and base.array is not None:
            primitive = replace(primitive, array=base.array)
    updates = {}
    for key in allowed:
        raw = _number(args, key)
        if raw is not None:
            updates[key] = _coerce_param(key, raw)
    count = _number(args, "array_count")
    offset = _vec(args, "array_offset")
    if count is not None or offset is not None:
        current = primitive.array or ArrayModifier(count=1)
        updates["array"] = ArrayModifier(
            count=int(count) if count is not None and float(count).is_integer() else (count if count is not None else current.count),
            offset=offset if offset is not None else current.offset,
        )
    return replace(primitive, **updates) if updates else primitive


def _kind(args: dict[str, ArgValue], required: bool) -> Optional[str]:
    if "kind" not in args:
        if required:
            raise MissingArg("kind")
        return None
    value = args["kind"]
    if not isinstance(value, Ident):
        raise InvalidArgValue("kind", "one of " + "|".join(sorted(PRIMITIVE_KINDS)), value)
    if value.value not in PRIMITIVE_KINDS:
        raise InvalidArgValue("kind", "one of " + "|".join(sorted(PRIMITIVE_KINDS)), value)
    return value.value


def _scale_arg(args: dict[str, ArgValue], key: str = "scale"):
    """scale accepts a uniform number or a vector."""
    if key not in args:
        return None
    value = args[key]
    if isinstance(value, Number):
        if value.value <= 0:
            raise InvalidArgValue(key, "a positive scale", value)
        return (value.value, value.value, value.value)
    if isinstance(value, VecValue):
        return value.value
    raise InvalidArgValue(key, "a number or vector", value)


def _material_from_args(args: dict[str, ArgValue], base: Optional[MaterialSpec]) -> Optional[MaterialSpec]:
    color = _vec(args, "color")
    label = _string(args, "mat_name")
    if color is None and label is None:
        return None
    current = base or MaterialSpec()
    return MaterialSpec(
        base_color=color if color is not None else current.base_color,
        name=label if label is not None else current.name,
    )


def _rotation_from_args(args: dict[str, ArgValue]):
    rotate = _vec(args, "rotate")
    if rotate is None:
        return None
    return tuple(math.radians(c) for c in rotate)


def _require_existing(scene: Scene, name: str):
    obj = scene.objects.get(name)
    if obj is None:
        raise UnknownObject(f"no object named {name!r} in scene")
    return obj


def _execute_statement(scene: Scene, stmt: Statement) -> None:
    verb = stmt.verb
    args = stmt.args
    if verb == "create":
        name = _name(args)
        kind = _kind(args, required=True)
        primitive = _primitive_from_args(kind, args)
        translation = _vec(args, "at") or (0.0, 0.0, 0.0)
        rotation = _rotation_from_args(args) or (0.0, 0.0, 0.0)
        scale = _scale_arg(args) or (1.0, 1.0, 1.0)
        material = _material_from_args(args, base=None)
        upsert_object(scene, name, primitive, Transform(translation, rotation, scale), material)
    elif verb == "modify":
        name = _name(args)
        obj = _require_existing(scene, name)
        kind = _kind(args, required=False) or obj.primitive.kind
        primitive = _primitive_from_args(kind, args, base=obj.primitive)
        translation = _vec(args, "at")
        rotation = _rotation_from_args(args)
        scale = _scale_arg(args)
        transform = Transform(
            translation if translation is not None else obj.transform.translation,
            rotation if rotation is not None else obj.transform.rotation_euler,
            scale if scale is not None else obj.transform.scale,
        )
        material = _material_from_args(args, base=obj.material)
        upsert_object(scene, name, primitive, transform, material)
    elif verb == "material":
        name = _name(args)
        obj = _require_existing(scene, name)
        color = _vec(args, "color", required=True)
        label = _string(args, "mat_name")
        upsert_object(scene, name, obj.primitive, obj.transform, MaterialSpec(color, label))
    elif verb == "transform":
        name = _name(args)
        obj = _require_existing(scene, name)
        translate = _vec(args, "translate")
        rx = _number(args, "rotate_x")
        ry = _number(args, "rotate_y")
        rz = _number(args, "rotate_z")
        scale = _scale_arg(args)
        if translate is None and rx is None and ry is None and rz is None and scale is None:
            raise MissingArg("translate|rotate_x|rotate_y|rotate_z|scale")
        t = obj.transform
        translation = t.translation
        if translate is not None:
            translation = tuple(a + b for a, b in zip(translation, translate))
        rotation = (
            t.rotation_euler[0] + math.radians(rx or 0.0),
            t.rotation_euler[1] + math.radians(ry or 0.0),
            t.rotation_euler[2] + math.radians(rz or 0.0),
        )
        new_scale = t.scale
        if scale is not None:
            new_scale = tuple(a * b for a, b in zip(new_scale, scale))
        upsert_object(scene, name, obj.primitive, Transform(translation, rotation, new_scale), obj.material)
    elif verb == "hide":
        hide_object(scene, _name(args))
    elif verb == "show":
        show_object(scene, _name(args))
    elif verb == "duplicate":
        name = _name(args)
        obj = _require_existing(scene, name)
        new_name = _name(args, "new_name")
        offset = _vec(args, "offset", required=True)
        translation = tuple(a + b for a, b in zip(obj.transform.translation, offset))
        transform = Transform(translation, obj.transform.rotation_euler, obj.transform.scale)
        upsert_object(scene, new_name, obj.primitive, transform, obj.material)
    else:  # unreachable: the parser only emits known verbs
        raise InvalidArgValue("verb", "a known verb", Ident(verb))


def execute(scene: Scene, script: Script) -> ExecReport:
    revision_before = scene.revision
    for index, stmt in enumerate(script.statements):
        try:
            _execute_statement(scene, stmt)
        except (EngineError, MissingArg, InvalidArgValue) as exc:
            return ExecReport(
                executed=index,
                failed_at={"statement_index": index, "error": {"code": exc.code, "message": str(exc)}},
                revision_before=revision_before,
                revision_after=scene.revision,
            )
    return ExecReport(
        executed=len(script.statements),
        failed_at=None,
        revision_before=revision_before,
        revision_after=scene.revision,
    )
