"""Procedural low-poly meshes for the primitive set.

Each generator is deterministic and closed over its parameters; vertex
counts follow the closed forms in ``expected_vertex_count`` (kept as
independent arithmetic so tests can cross-check construction against
formula). Faces are index lists, counter-clockwise seen from outside.
Cylinder and cone caps are single n-gons with no center vertex.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .types import (
    ArrayModifier,
    Cone,
    Cube,
    Cylinder,
    IcoSphere,
    Plane,
    Primitive,
    Torus,
    UvSphere,
    Vec3,
    validate_primitive,
)


@dataclass
class Mesh:
    vertices: list[Vec3] = field(default_factory=list)
    faces: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def edge_count(self) -> int:
        """Distinct undirected vertex pairs across all faces."""
        edges = set()
        for face in self.faces:
            for i, a in enumerate(face):
                b = face[(i + 1) % len(face)]
                edges.add((a, b) if a < b else (b, a))
        return len(edges)

    def euler_characteristic(self) -> int:
        return self.vertex_count - self.edge_count() + len(self.faces)


def expected_vertex_count(primitive: Primitive) -> int:
    """Closed-form vertex count; independent of mesh construction."""
    base: int
    if isinstance(primitive, Plane):
        base = 4
    elif isinstance(primitive, Cube):
        base = 8
    elif isinstance(primitive, UvSphere):
        base = primitive.segments * (primitive.rings - 1) + 2
    elif isinstance(primitive, IcoSphere):
        base = 10 * 4**primitive.subdivisions + 2
    elif isinstance(primitive, Cylinder):
        base = 2 * primitive.segments
    elif isinstance(primitive, Cone):
        base = primitive.segments + 1
    elif isinstance(primitive, Torus):
        base = primitive.major_segments * primitive.minor_segments
    else:
        raise TypeError(f"unknown primitive {primitive!r}")
    count = primitive.array.count if primitive.array else 1
    return base * count


def generate_mesh(primitive: Primitive) -> Mesh:
    validate_primitive(primitive)
    if isinstance(primitive, Plane):
        mesh = _plane(primitive.size)
    elif isinstance(primitive, Cube):
        mesh = _cube(primitive.size)
    elif isinstance(primitive, UvSphere):
        mesh = _uv_sphere(primitive.segments, primitive.rings, primitive.radius)
    elif isinstance(primitive, IcoSphere):
        mesh = _ico_sphere(primitive.subdivisions, primitive.radius)
    elif isinstance(primitive, Cylinder):
        mesh = _cylinder(primitive.segments, primitive.radius, primitive.depth)
    elif isinstance(primitive, Cone):
        mesh = _cone(primitive.segments, primitive.radius, primitive.depth)
    elif isinstance(primitive, Torus):
        mesh = _torus(primitive.major_segments, primitive.minor_segments, primitive.major_radius, primitive.minor_radius)
    else:
        raise TypeError(f"unknown primitive {primitive!r}")
    if primitive.array is not None:
        mesh = _apply_array(mesh, primitive.array)
    return mesh


def _plane(size: float) -> Mesh:
    h = size / 2.0
    return Mesh(
        vertices=[(-h, -h, 0.0), (h, -h, 0.0), (h, h, 0.0), (-h, h, 0.0)],
        faces=[(0, 1, 2, 3)],
    )


def _cube(size: float) -> Mesh:
    h = size / 2.0
    vertices = [
        (-h, -h, -h), (h, -h, -h), (h, h, -h), (-h, h, -h),
        (-h, -h, h), (h, -h, h), (h, h, h), (-h, h, h),
    ]
    faces = [
        (0, 3, 2, 1),  # bottom, -Z
        (4, 5, 6, 7),  # top, +Z
        (0, 1, 5, 4),  # front, -Y
        (1, 2, 6, 5),  # right, +X
        (2, 3, 7, 6),  # back, +Y
        (3, 0, 4, 7),  # left, -X
    ]
    return Mesh(vertices=vertices, faces=faces)


def _ring(count: int, radius: float, z: float) -> list[Vec3]:
    step = 2.0 * math.pi / count
    return [(radius * math.cos(j * step), radius * math.sin(j * step), z) for j in range(count)]


def _uv_sphere(segments: int, rings: int, radius: float) -> Mesh:
    vertices: list[Vec3] = [(0.0, 0.0, radius)]
    for i in range(1, rings):
        theta = math.pi * i / rings
        vertices.extend(_ring(segments, radius * math.sin(theta), radius * math.cos(theta)))
    vertices.append((0.0, 0.0, -radius))
    top, bottom = 0, len(vertices) - 1

    def ring_index(i: int, j: int) -> int:
        return 1 + (i - 1) * segments + j % segments

    faces: list[tuple[int, ...]] = []
    for j in range(segments):
        faces.append((top, ring_index(1, j), ring_index(1, j + 1)))
    for i in range(1, rings - 1):
        for j in range(segments):
            faces.append((ring_index(i, j), ring_index(i + 1, j), ring_index(i + 1, j + 1), ring_index(i, j + 1)))
    for j in range(segments):
        faces.append((bottom, ring_index(rings - 1, j + 1), ring_index(rings - 1, j)))
    return Mesh(vertices=vertices, faces=faces)


# Unit icosahedron; the face table is counter-clockwise from outside.
_ICO_T = (1.0 + math.sqrt(5.0)) / 2.0
_ICO_VERTS = [
    (-1.0, _ICO_T, 0.0), (1.0, _ICO_T, 0.0), (-1.0, -_ICO_T, 0.0), (1.0, -_ICO_T, 0.0),
    (0.0, -1.0, _ICO_T), (0.0, 1.0, _ICO_T), (0.0, -1.0, -_ICO_T), (0.0, 1.0, -_ICO_T),
    (_ICO_T, 0.0, -1.0), (_ICO_T, 0.0, 1.0), (-_ICO_T, 0.0, -1.0), (-_ICO_T, 0.0, 1.0),
]
_ICO_FACES = [
    (0, 11, 5), (0, 5, 1), (0, 1, 7), (0, 7, 10), (0, 10, 11),
    (1, 5, 9), (5, 11, 4), (11, 10, 2), (10, 7, 6), (7, 1, 8),
    (3, 9, 4), (3, 4, 2), (3, 2, 6), (3, 6, 8), (3, 8, 9),
    (4, 9, 5), (2, 4, 11), (6, 2, 10), (8, 6, 7), (9, 8, 1),
]


def _ico_sphere(subdivisions: int, radius: float) -> Mesh:
    def project(p: Vec3) -> Vec3:
        norm = math.sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2])
        f = radius / norm
        return (p[0] * f, p[1] * f, p[2] * f)

    vertices = [project(v) for v in _ICO_VERTS]
    faces = list(_ICO_FACES)
    for _ in range(subdivisions):
        midpoint_cache: dict[tuple[int, int], int] = {}

        def midpoint(a: int, b: int) -> int:
            key = (a, b) if a < b else (b, a)
            cached = midpoint_cache.get(key)
            if cached is not None:
                return cached
            pa, pb = vertices[a], vertices[b]
            vertices.append(project(((pa[0] + pb[0]) / 2, (pa[1] + pb[1]) / 2, (pa[2] + pb[2]) / 2)))
            midpoint_cache[key] = len(vertices) - 1
            return midpoint_cache[key]

        next_faces: list[tuple[int, ...]] = []
        for a, b, c in faces:
            ab, bc, ca = midpoint(a, b), midpoint(b, c), midpoint(c, a)
            next_faces.extend([(a, ab, ca), (b, bc, ab), (c, ca, bc), (ab, bc, ca)])
        faces = next_faces
    return Mesh(vertices=vertices, faces=faces)


def _cylinder(segments: int, radius: float, depth: float) -> Mesh:
    h = depth / 2.0
    vertices = _ring(segments, radius, -h) + _ring(segments, radius, h)
    faces: list[tuple[int, ...]] = []
    for j in range(segments):
        j2 = (j + 1) % segments
        faces.append((j, j2, segments + j2, segments + j))
    faces.append(tuple(reversed(range(segments))))  # bottom cap, -Z
    faces.append(tuple(range(segments, 2 * segments)))  # top cap, +Z
    return Mesh(vertices=vertices, faces=faces)


def _cone(segments: int, radius: float, depth: float) -> Mesh:
    h = depth / 2.0
    vertices = _ring(segments, radius, -h) + [(0.0, 0.0, h)]
    apex = segments
    faces: list[tuple[int, ...]] = [(j, (j + 1) % segments, apex) for j in range(segments)]
    faces.append(tuple(reversed(range(segments))))  # base cap, -Z
    return Mesh(vertices=vertices, faces=faces)


def _torus(major_segments: int, minor_segments: int, major_radius: float, minor_radius: float) -> Mesh:
    vertices: list[Vec3] = []
    for i in range(major_segments):
        theta = 2.0 * math.pi * i / major_segments
        ct, st = math.cos(theta), math.sin(theta)
        for j in range(minor_segments):
            phi = 2.0 * math.pi * j / minor_segments
            rho = major_radius + minor_radius * math.cos(phi)
            vertices.append((rho * ct, rho * st, minor_radius * math.sin(phi)))

    def idx(i: int, j: int) -> int:
        return (i % major_segments) * minor_segments + j % minor_segments

    faces = [
        (idx(i, j), idx(i + 1, j), idx(i + 1, j + 1), idx(i, j + 1))
        for i in range(major_segments)
        for j in range(minor_segments)
    ]
    return Mesh(vertices=vertices, faces=faces)


def _apply_array(mesh: Mesh, modifier: ArrayModifier) -> Mesh:
    ox, oy, oz = modifier.offset
    vertices: list[Vec3] = []
    faces: list[tuple[int, ...]] = []
    base = mesh.vertex_count
    for i in range(modifier.count):
        dx, dy, dz = ox * i, oy * i, oz * i
        vertices.extend((x + dx, y + dy, z + dz) for x, y, z in mesh.vertices)
        shift = base * i
        faces.extend(tuple(v + shift for v in face) for face in mesh.faces)
    return Mesh(vertices=vertices, faces=faces)
