"""Core value types for the headless scene engine.

Coordinate convention: right-handed, Z-up, units are meters. Vectors are
plain ``(x, y, z)`` tuples so they serialize to JSON without adapters.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field, replace
from typing import Optional, Union

Vec3 = tuple[float, float, float]

NAME_PATTERN = re.compile(r"^[A-Za-z0-9_]+$")

# Objects at or beyond this X coordinate are considered hidden ("moved out
# of frame" rather than deleted).
HIDDEN_X_THRESHOLD = 1000.0


class EngineError(Exception):
    """Base class for scene engine failures; ``code`` is a stable wire id."""

    code = "engine_error"


class InvalidName(EngineError):
    code = "invalid_name"


class InvalidPrimitiveParams(EngineError):
    code = "invalid_primitive_params"


class UnknownObject(EngineError):
    code = "unknown_object"


class MalformedDocument(EngineError):
    code = "malformed_document"


def vec3(x: float, y: float, z: float) -> Vec3:
    v = (float(x), float(y), float(z))
    for c in v:
        if not math.isfinite(c):
            raise ValueError(f"non-finite vector component: {v!r}")
    return v


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidPrimitiveParams(message)


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


@dataclass(frozen=True)
class ArrayModifier:
    """Linear array: ``count`` copies, each offset by ``i * offset``."""

    count: int
    offset: Vec3 = (0.0, 0.0, 0.0)

    def validate(self) -> None:
        _require(_is_int(self.count) and self.count >= 1, f"array count must be an int >= 1, got {self.count!r}")
        vec3(*self.offset)


@dataclass(frozen=True)
class Cube:
    size: float = 2.0
    array: Optional[ArrayModifier] = None
    kind = "cube"

    def validate(self) -> None:
        _require(self.size > 0, f"cube size must be > 0, got {self.size!r}")


@dataclass(frozen=True)
class Plane:
    size: float = 2.0
    array: Optional[ArrayModifier] = None
    kind = "plane"

    def validate(self) -> None:
        _require(self.size > 0, f"plane size must be > 0, got {self.size!r}")


@dataclass(frozen=True)
class UvSphere:
    segments: int = 32
    rings: int = 16
    radius: float = 1.0
    array: Optional[ArrayModifier] = None
    kind = "uv_sphere"

    def validate(self) -> None:
        _require(_is_int(self.segments) and self.segments >= 3, f"uv_sphere segments must be an int >= 3, got {self.segments!r}")
        _require(_is_int(self.rings) and self.rings >= 3, f"uv_sphere rings must be an int >= 3, got {self.rings!r}")
        _require(self.radius > 0, f"uv_sphere radius must be > 0, got {self.radius!r}")


@dataclass(frozen=True)
class IcoSphere:
    subdivisions: int = 2
    radius: float = 1.0
    array: Optional[ArrayModifier] = None
    kind = "ico_sphere"

    def validate(self) -> None:
        _require(
            _is_int(self.subdivisions) and 0 <= self.subdivisions <= 5,
            f"ico_sphere subdivisions must be an int in 0..5, got {self.subdivisions!r}",
        )
        _require(self.radius > 0, f"ico_sphere radius must be > 0, got {self.radius!r}")


@dataclass(frozen=True)
class Cylinder:
    segments: int = 32
    radius: float = 1.0
    depth: float = 2.0
    array: Optional[ArrayModifier] = None
    kind = "cylinder"

    def validate(self) -> None:
        _require(_is_int(self.segments) and self.segments >= 3, f"cylinder segments must be an int >= 3, got {self.segments!r}")
        _require(self.radius > 0, f"cylinder radius must be > 0, got {self.radius!r}")
        _require(self.depth > 0, f"cylinder depth must be > 0, got {self.depth!r}")


@dataclass(frozen=True)
class Cone:
    segments: int = 32
    radius: float = 1.0
    depth: float = 2.0
    array: Optional[ArrayModifier] = None
    kind = "cone"

    def validate(self) -> None:
        _require(_is_int(self.segments) and self.segments >= 3, f"cone segments must be an int >= 3, got {self.segments!r}")
        _require(self.radius > 0, f"cone radius must be > 0, got {self.radius!r}")
        _require(self.depth > 0, f"cone depth must be > 0, got {self.depth!r}")


@dataclass(frozen=True)
class Torus:
    major_segments: int = 48
    minor_segments: int = 12
    major_radius: float = 1.0
    minor_radius: float = 0.25
    array: Optional[ArrayModifier] = None
    kind = "torus"

    def validate(self) -> None:
        _require(_is_int(self.major_segments) and self.major_segments >= 3, f"torus major_segments must be an int >= 3, got {self.major_segments!r}")
        _require(_is_int(self.minor_segments) and self.minor_segments >= 3, f"torus minor_segments must be an int >= 3, got {self.minor_segments!r}")
        _require(self.major_radius > 0, f"torus major_radius must be > 0, got {self.major_radius!r}")
        _require(self.minor_radius > 0, f"torus minor_radius must be > 0, got {self.minor_radius!r}")
        _require(
            self.minor_radius < self.major_radius,
            f"torus minor_radius must be < major_radius, got {self.minor_radius!r} >= {self.major_radius!r}",
        )


Primitive = Union[Cube, Plane, UvSphere, IcoSphere, Cylinder, Cone, Torus]

PRIMITIVE_KINDS: dict[str, type] = {
    cls.kind: cls for cls in (Cube, Plane, UvSphere, IcoSphere, Cylinder, Cone, Torus)
}


def validate_primitive(primitive: Primitive) -> None:
    """Raise InvalidPrimitiveParams on any out-of-bounds parameter."""
    if type(primitive) not in PRIMITIVE_KINDS.values():
        raise InvalidPrimitiveParams(f"unknown primitive {primitive!r}")
    primitive.validate()
    if primitive.array is not None:
        primitive.array.validate()


@dataclass(frozen=True)
class Transform:
    translation: Vec3 = (0.0, 0.0, 0.0)
    rotation_euler: Vec3 = (0.0, 0.0, 0.0)  # radians, applied X then Y then Z
    scale: Vec3 = (1.0, 1.0, 1.0)

    def validate(self) -> None:
        vec3(*self.translation)
        vec3(*self.rotation_euler)
        vec3(*self.scale)
        if not all(c > 0 for c in self.scale):
            raise InvalidPrimitiveParams(f"scale components must be > 0, got {self.scale!r}")


IDENTITY = Transform()


@dataclass(frozen=True)
class MaterialSpec:
    base_color: Vec3 = (0.8, 0.8, 0.8)
    name: Optional[str] = None

    def validate(self) -> None:
        for c in self.base_color:
            if not (isinstance(c, (int, float)) and 0.0 <= c <= 1.0):
                raise InvalidPrimitiveParams(f"base_color channels must be in [0,1], got {self.base_color!r}")


DEFAULT_MATERIAL = MaterialSpec()


@dataclass
class SceneObject:
    """A named primitive instance. ``hidden`` always mirrors the x >= 1000
    parking convention, so it never disagrees with the transform."""

    name: str
    primitive: Primitive
    transform: Transform = IDENTITY
    material: MaterialSpec = DEFAULT_MATERIAL
    hidden: bool = False

    def copy(self) -> "SceneObject":
        return SceneObject(self.name, self.primitive, self.transform, self.material, self.hidden)


def validate_name(name: str) -> None:
    if not isinstance(name, str) or not NAME_PATTERN.match(name or ""):
        raise InvalidName(f"object names must match [A-Za-z0-9_]+, got {name!r}")


def with_translation_x(transform: Transform, x: float) -> Transform:
    t = transform.translation
    return replace(transform, translation=(x, t[1], t[2]))
