"""Deterministic software rasterizer for critique screenshots.

Orthographic camera, flat per-face Lambert shading under one fixed
directional light, painter's algorithm (faces sorted far-to-near by
view depth of their centroid, ties broken by object name then face
index). The output is a pure function of its inputs down to the byte,
so screenshot hashes are stable golden values.

Painter's sorting is exact for the convex low-poly primitives this
engine emits; interpenetrating meshes can draw in the wrong order,
which is an accepted artifact of the approach.
"""
from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass

from ..scene import Scene, SceneObject, generate_mesh, transform_point

BACKGROUND = (230, 230, 230)
MIN_DIMENSION = 16
MAX_DIMENSION = 4096
AMBIENT_FLOOR = 0.15

# Direction the key light travels, normalized; faces are lit by how much
# they turn against it.
_L = (-1.0, -1.0, -2.0)
_L_NORM = math.sqrt(_L[0] ** 2 + _L[1] ** 2 + _L[2] ** 2)
LIGHT_DIR = (_L[0] / _L_NORM, _L[1] / _L_NORM, _L[2] / _L_NORM)

DEFAULT_AZIMUTH_DEG = 45.0
DEFAULT_ELEVATION_DEG = 35.264  # classic 3/4 isometric-style view


class InvalidDimensions(Exception):
    code = "invalid_dimensions"


@dataclass(frozen=True)
class Camera:
    azimuth_deg: float = DEFAULT_AZIMUTH_DEG
    elevation_deg: float = DEFAULT_ELEVATION_DEG
    frame_center: tuple[float, float, float] = (0.0, 0.0, 0.0)
    frame_extent: float = 1.0  # half-width of the view volume
    kind = "orthographic"


@dataclass
class Image:
    width: int
    height: int
    pixels: bytearray  # row-major RGB, 8-bit

    @classmethod
    def filled(cls, width: int, height: int, color: tuple[int, int, int]) -> "Image":
        return cls(width, height, bytearray(bytes(color) * (width * height)))


def default_camera(scene: Scene) -> Camera:
    """Frame the visible objects from the standard 3/4 view."""
    boxes = []
    for obj in scene.visible_objects():
        mesh = generate_mesh(obj.primitive)
        pts = [transform_point(obj.transform, v) for v in mesh.vertices]
        xs, ys, zs = zip(*pts)
        boxes.append(((min(xs), min(ys), min(zs)), (max(xs), max(ys), max(zs))))
    if not boxes:
        return Camera()
    lo = tuple(min(b[0][i] for b in boxes) for i in range(3))
    hi = tuple(max(b[1][i] for b in boxes) for i in range(3))
    center = tuple((lo[i] + hi[i]) / 2.0 for i in range(3))
    half_extent = max((hi[i] - lo[i]) / 2.0 for i in range(3))
    return Camera(frame_center=center, frame_extent=max(1.0, 1.2 * half_extent))


def _camera_basis(camera: Camera):
    az = math.radians(camera.azimuth_deg)
    el = math.radians(camera.elevation_deg)
    # Unit vector from the frame center toward the eye.
    eye = (math.cos(el) * math.cos(az), math.cos(el) * math.sin(az), math.sin(el))
    up = (0.0, 0.0, 1.0)
    # right = up x eye, renormalized; view_up = eye x right
    right = (up[1] * eye[2] - up[2] * eye[1], up[2] * eye[0] - up[0] * eye[2], up[0] * eye[1] - up[1] * eye[0])
    norm = math.sqrt(sum(c * c for c in right))
    right = (right[0] / norm, right[1] / norm, right[2] / norm)
    view_up = (
        eye[1] * right[2] - eye[2] * right[1],
        eye[2] * right[0] - eye[0] * right[2],
        eye[0] * right[1] - eye[1] * right[0],
    )
    return right, view_up, eye


def _newell_normal(points: list[tuple[float, float, float]]) -> tuple[float, float, float]:
    nx = ny = nz = 0.0
    n = len(points)
    for i in range(n):
        ax, ay, az_ = points[i]
        bx, by, bz = points[(i + 1) % n]
        nx += (ay - by) * (az_ + bz)
        ny += (az_ - bz) * (ax + bx)
        nz += (ax - bx) * (ay + by)
    norm = math.sqrt(nx * nx + ny * ny + nz * nz)
    if norm == 0.0:
        return (0.0, 0.0, 1.0)
    return (nx / norm, ny / norm, nz / norm)


def _shade(base_color, normal) -> tuple[int, int, int]:
    toward_light = (-LIGHT_DIR[0], -LIGHT_DIR[1], -LIGHT_DIR[2])
    lambert = normal[0] * toward_light[0] + normal[1] * toward_light[1] + normal[2] * toward_light[2]
    intensity = max(AMBIENT_FLOOR, lambert)

    def channel(c: float) -> int:
        v = math.floor(255.0 * max(0.0, min(1.0, c)) * intensity + 0.5)  # round half up
        return min(255, v)

    return (channel(base_color[0]), channel(base_color[1]), channel(base_color[2]))


def _fill_triangle(img: Image, p0, p1, p2, color: tuple[int, int, int]) -> None:
    area = (p1[0] - p0[0]) * (p2[1] - p0[1]) - (p1[1] - p0[1]) * (p2[0] - p0[0])
    if area == 0.0:
        return
    if area < 0.0:
        p1, p2 = p2, p1
    min_x = max(0, int(math.floor(min(p0[0], p1[0], p2[0]) - 0.5)))
    max_x = min(img.width - 1, int(math.ceil(max(p0[0], p1[0], p2[0]) + 0.5)))
    min_y = max(0, int(math.floor(min(p0[1], p1[1], p2[1]) - 0.5)))
    max_y = min(img.height - 1, int(math.ceil(max(p0[1], p1[1], p2[1]) + 0.5)))
    if min_x > max_x or min_y > max_y:
        return
    r, g, b = color
    pixels = img.pixels
    width = img.width
    x0, y0 = p0
    x1, y1 = p1
    x2, y2 = p2
    for py in range(min_y, max_y + 1):
        cy = py + 0.5
        row = py * width
        for px in range(min_x, max_x + 1):
            cx = px + 0.5
            w0 = (x1 - x0) * (cy - y0) - (y1 - y0) * (cx - x0)
            w1 = (x2 - x1) * (cy - y1) - (y2 - y1) * (cx - x1)
            w2 = (x0 - x2) * (cy - y2) - (y0 - y2) * (cx - x2)
            if w0 >= 0.0 and w1 >= 0.0 and w2 >= 0.0:
                at = (row + px) * 3
                pixels[at] = r
                pixels[at + 1] = g
                pixels[at + 2] = b


def render(scene: Scene, camera: Camera, width: int, height: int) -> Image:
    if not (MIN_DIMENSION <= width <= MAX_DIMENSION) or not (MIN_DIMENSION <= height <= MAX_DIMENSION):
        raise InvalidDimensions(f"width/height must be in [{MIN_DIMENSION}, {MAX_DIMENSION}], got {width}x{height}")
    img = Image.filled(width, height, BACKGROUND)
    right, view_up, eye = _camera_basis(camera)
    cx, cy, cz = camera.frame_center
    half_w = camera.frame_extent
    half_h = camera.frame_extent * height / width

    # (depth, object name, face index, screen points, color), sorted far first
    draw_list = []
    for obj in sorted(scene.visible_objects(), key=lambda o: o.name):
        mesh = generate_mesh(obj.primitive)
        world = [transform_point(obj.transform, v) for v in mesh.vertices]
        screen = []
        depths = []
        for wx, wy, wz in world:
            qx, qy, qz = wx - cx, wy - cy, wz - cz
            vx = qx * right[0] + qy * right[1] + qz * right[2]
            vy = qx * view_up[0] + qy * view_up[1] + qz * view_up[2]
            vd = qx * eye[0] + qy * eye[1] + qz * eye[2]  # larger = closer
            screen.append(((vx / half_w + 1.0) * 0.5 * width, (1.0 - vy / half_h) * 0.5 * height))
            depths.append(vd)
        for face_index, face in enumerate(mesh.faces):
            pts_world = [world[i] for i in face]
            color = _shade(obj.material.base_color, _newell_normal(pts_world))
            centroid_depth = sum(depths[i] for i in face) / len(face)
            draw_list.append((centroid_depth, obj.name, face_index, [screen[i] for i in face], color))

    draw_list.sort(key=lambda item: (item[0], item[1], item[2]))
    for _, _, _, pts, color in draw_list:
        for i in range(1, len(pts) - 1):
            _fill_triangle(img, pts[0], pts[i], pts[i + 1], color)
    return img


def encode_ppm(image: Image) -> bytes:
    header = f"P6\n{image.width} {image.height}\n255\n".encode("ascii")
    return header + bytes(image.pixels)


def decode_ppm(data: bytes) -> Image:
    parts = data.split(b"\n", 3)
    if len(parts) != 4 or parts[0] != b"P6" or parts[2] != b"255":
        raise ValueError("not a comodel P6 stream")
    w, h = (int(t) for t in parts[1].split())
    payload = parts[3]
    if len(payload) != w * h * 3:
        raise ValueError("truncated pixel payload")
    return Image(w, h, bytearray(payload))


def content_hash(ppm_bytes: bytes) -> str:
    return hashlib.sha256(ppm_bytes).hexdigest()


def screenshot(scene: Scene, width: int = 256, height: int = 256, camera: Camera | None = None) -> tuple[bytes, str]:
    """Render with the default framing; returns (ppm bytes, sha-256 hex)."""
    cam = camera if camera is not None else default_camera(scene)
    data = encode_ppm(render(scene, cam, width, height))
    return data, content_hash(data)
