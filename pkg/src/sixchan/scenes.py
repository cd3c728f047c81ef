"""Seeded synthetic day/night driving scenes with ground-truth car boxes.

A scene layout (horizon, buildings, cars) is sampled once per seed; the day
image is rendered from it and the night image is derived from the *same*
geometry, so day/night annotation lists are identical by construction. The
night transform is per-channel gain + gamma, followed by additive headlight
glow and Gaussian noise; the analytic part matches the oracle translator's
day-to-night map.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError
from .types import (
    Annotation,
    Authenticity,
    BBox,
    DatasetSplit,
    Domain,
    ImageBuffer,
    Sample,
    SplitName,
    ValueRange,
)

# Analytic day->night base transform; the oracle translator uses the same values.
NIGHT_CHANNEL_GAINS = (0.25, 0.25, 0.25)
NIGHT_GAMMA = 2.2


@dataclass(frozen=True)
class DayPalette:
    sky_top: tuple = (0.50, 0.66, 0.88)
    sky_bottom: tuple = (0.78, 0.84, 0.92)
    road: tuple = (0.46, 0.46, 0.47)
    shoulder: tuple = (0.60, 0.57, 0.50)
    lane_mark: tuple = (0.85, 0.85, 0.80)
    building_tones: tuple = ((0.55, 0.50, 0.45), (0.48, 0.52, 0.55), (0.62, 0.58, 0.52))


@dataclass(frozen=True)
class NightPalette:
    channel_gains: tuple = NIGHT_CHANNEL_GAINS
    gamma: float = NIGHT_GAMMA
    headlight_color: tuple = (1.0, 0.96, 0.80)
    headlight_strength: tuple = (0.65, 0.95)
    taillight_color: tuple = (0.9, 0.15, 0.10)


@dataclass(frozen=True)
class SceneConfig:
    n_cars: tuple = (1, 6)
    car_size: tuple = (24, 96)
    day: DayPalette = field(default_factory=DayPalette)
    night: NightPalette = field(default_factory=NightPalette)
    noise_sigma: float = 0.02
    image_size: int = 256
    seed: int = 0

    def validate(self) -> None:
        lo, hi = self.n_cars
        if not (1 <= lo <= hi):
            raise ConfigurationError(f"n_cars range {self.n_cars} must satisfy 1 <= lo <= hi")
        slo, shi = self.car_size
        if not (4 <= slo <= shi <= self.image_size):
            raise ConfigurationError(
                f"car_size range {self.car_size} must fit the {self.image_size}px image"
            )
        if self.noise_sigma < 0:
            raise ConfigurationError("noise_sigma must be >= 0")


@dataclass
class _Car:
    x0: int
    y0: int
    w: int
    h: int
    body: np.ndarray
    cabin: np.ndarray
    facing: int  # +1 faces right, -1 faces left
    light: float

    @property
    def box(self) -> BBox:
        return BBox(float(self.x0), float(self.y0), float(self.x0 + self.w), float(self.y0 + self.h))


@dataclass
class _Layout:
    size: int
    horizon: int
    sky_jitter: float
    buildings: list
    lane_xs: np.ndarray
    cars: list


def _fill(img, y0, y1, x0, x1, color):
    img[max(0, y0):max(0, y1), max(0, x0):max(0, x1)] = color


def _sample_layout(rng: np.random.Generator, config: SceneConfig) -> _Layout:
    size = config.image_size
    horizon = int(rng.integers(int(size * 0.35), int(size * 0.55)))
    sky_jitter = float(rng.uniform(0.92, 1.08))

    buildings = []
    for _ in range(int(rng.integers(2, 5))):
        bw = int(rng.integers(size // 10, size // 3))
        bx = int(rng.integers(0, max(1, size - bw)))
        bh = int(rng.integers(size // 10, max(size // 9, horizon - 4)))
        tone = config.day.building_tones[int(rng.integers(0, len(config.day.building_tones)))]
        shade = float(rng.uniform(0.75, 1.1))
        buildings.append((bx, bw, bh, tuple(c * shade for c in tone)))

    n_dash = max(3, size // 36)
    lane_xs = rng.integers(0, size, n_dash)

    lo, hi = config.n_cars
    target = int(rng.integers(lo, hi + 1))
    cars: list[_Car] = []
    smin, smax = config.car_size
    for k in range(target):
        for _ in range(30):
            depth = float(rng.uniform(0.0, 1.0))
            w = int(np.clip(rng.uniform(0.75, 1.25) * (smin + (smax - smin) * (0.3 + 0.7 * depth)), smin, smax))
            h = int(np.clip(w * rng.uniform(0.42, 0.58), 8, None))
            ybot = int(horizon + 4 + depth * (size - horizon - 8))
            y0 = ybot - h
            if y0 <= horizon - h // 3:
                continue
            x0 = int(rng.integers(1, max(2, size - w - 1)))
            cand = (x0, y0, x0 + w, ybot)
            if any(_rect_iou(cand, (c.x0, c.y0, c.x0 + c.w, c.y0 + c.h)) > 0.2 for c in cars):
                continue
            hue = rng.uniform(0.0, 1.0)
            body = _hsv_color(hue, rng.uniform(0.55, 0.95), rng.uniform(0.45, 0.95))
            cabin = body * rng.uniform(0.55, 0.8)
            cars.append(
                _Car(x0, y0, w, h, body, cabin, facing=1 if rng.uniform() < 0.5 else -1,
                     light=float(rng.uniform(*config.night.headlight_strength)))
            )
            break
        if not cars and k == target - 1:
            # guarantee at least one car: center placement, no overlap possible
            w = (smin + smax) // 2
            h = int(w * 0.5)
            y0 = min(size - h - 2, horizon + max(4, (size - horizon) // 2))
            cars.append(_Car((size - w) // 2, y0, w, h, _hsv_color(0.6, 0.8, 0.8),
                             _hsv_color(0.6, 0.8, 0.5), 1, 0.8))
    return _Layout(size, horizon, sky_jitter, buildings, lane_xs, cars)


def _rect_iou(a, b) -> float:
    ix = max(0, min(a[2], b[2]) - max(a[0], b[0]))
    iy = max(0, min(a[3], b[3]) - max(a[1], b[1]))
    inter = ix * iy
    if inter == 0:
        return 0.0
    ar_a = (a[2] - a[0]) * (a[3] - a[1])
    ar_b = (b[2] - b[0]) * (b[3] - b[1])
    return inter / (ar_a + ar_b - inter)


def _hsv_color(h: float, s: float, v: float) -> np.ndarray:
    i = int(h * 6.0) % 6
    f = h * 6.0 - int(h * 6.0)
    p, q, t = v * (1 - s), v * (1 - f * s), v * (1 - (1 - f) * s)
    rgb = [(v, t, p), (q, v, p), (p, v, t), (p, q, v), (t, p, v), (v, p, q)][i]
    return np.array(rgb, dtype=np.float32)


def _render_day(layout: _Layout, config: SceneConfig) -> np.ndarray:
    size = layout.size
    pal = config.day
    img = np.empty((size, size, 3), dtype=np.float32)

    # sky gradient down to the horizon
    t = (np.arange(size, dtype=np.float32) / max(1, layout.horizon))[:, None, None].clip(0, 1)
    top = np.array(pal.sky_top, np.float32) * layout.sky_jitter
    bot = np.array(pal.sky_bottom, np.float32) * layout.sky_jitter
    img[:] = top * (1 - t) + bot * t

    for bx, bw, bh, tone in layout.buildings:
        _fill(img, layout.horizon - bh, layout.horizon, bx, bx + bw, np.array(tone, np.float32))

    # road with slight depth shading, shoulder strip at the horizon
    depth = np.linspace(0.9, 1.05, size - layout.horizon, dtype=np.float32)[:, None, None]
    img[layout.horizon:] = np.array(pal.road, np.float32) * depth
    _fill(img, layout.horizon, layout.horizon + 3, 0, size, np.array(pal.shoulder, np.float32))

    # lane dashes
    ymid = (layout.horizon + size) // 2
    for x in layout.lane_xs:
        _fill(img, ymid, ymid + 2, int(x), int(x) + size // 32, np.array(pal.lane_mark, np.float32))

    for car in layout.cars:
        _draw_car_day(img, car)
    return np.clip(img, 0.0, 1.0)


def _draw_car_day(img: np.ndarray, car: _Car) -> None:
    x0, y0, w, h = car.x0, car.y0, car.w, car.h
    wheel_h = max(2, int(h * 0.18))
    body_top = y0 + int(h * 0.32)
    # cabin (upper, narrower), body (lower), wheels, window
    cx0 = x0 + int(w * (0.18 if car.facing > 0 else 0.10))
    cx1 = x0 + w - int(w * (0.10 if car.facing > 0 else 0.18))
    _fill(img, y0, body_top, cx0, cx1, car.cabin)
    _fill(img, body_top, y0 + h - wheel_h, x0, x0 + w, car.body)
    win = car.cabin * 0.45 + np.array([0.05, 0.08, 0.14], np.float32)
    _fill(img, y0 + 1, body_top, cx0 + max(1, w // 16), cx1 - max(1, w // 16), win)
    dark = np.array([0.06, 0.06, 0.07], np.float32)
    wy0 = y0 + h - wheel_h
    ww = max(2, int(w * 0.16))
    _fill(img, wy0, y0 + h, x0 + ww // 2, x0 + ww // 2 + ww, dark)
    _fill(img, wy0, y0 + h, x0 + w - ww - ww // 2, x0 + w - ww // 2, dark)
    # headlight dot at the front edge
    hl_y = body_top + max(1, int(h * 0.12))
    hl_x = x0 + w - 3 if car.facing > 0 else x0
    _fill(img, hl_y, hl_y + 2, hl_x, hl_x + 3, np.array([0.95, 0.92, 0.75], np.float32))


def night_base_from_day(day: np.ndarray, palette: NightPalette) -> np.ndarray:
    """The analytic part of the night render: (gain_c * x) ** gamma, clipped."""
    gains = np.asarray(palette.channel_gains, dtype=np.float64)
    out = np.clip(gains * day.astype(np.float64), 0.0, 1.0) ** palette.gamma
    return np.clip(out, 0.0, 1.0).astype(np.float32)


def _add_lights(img: np.ndarray, layout: _Layout, palette: NightPalette) -> None:
    size = layout.size
    yy, xx = np.mgrid[0:size, 0:size].astype(np.float32)
    for car in layout.cars:
        body_top = car.y0 + int(car.h * 0.32)
        hy = body_top + max(1, int(car.h * 0.12))
        hx = car.x0 + car.w - 2 if car.facing > 0 else car.x0 + 2
        sigma = 1.5 + 0.16 * car.h
        r2 = (yy - hy) ** 2 + (xx - hx) ** 2
        glow = car.light * np.exp(-r2 / (2.0 * sigma * sigma))
        img += glow[:, :, None] * np.array(palette.headlight_color, np.float32)
        tx = car.x0 + 2 if car.facing > 0 else car.x0 + car.w - 2
        r2t = (yy - hy) ** 2 + (xx - tx) ** 2
        tglow = 0.5 * car.light * np.exp(-r2t / (2.0 * (sigma * 0.55) ** 2))
        img += tglow[:, :, None] * np.array(palette.taillight_color, np.float32)


def generate_scene(seed: int, domain: Domain, config: SceneConfig | None = None) -> Sample:
    """Deterministic scene for (seed, domain, config); see module docstring."""
    config = config or SceneConfig()
    config.validate()
    rng = np.random.default_rng([config.seed & 0x7FFFFFFF, int(seed), 0])
    layout = _sample_layout(rng, config)
    day = _render_day(layout, config)

    if domain is Domain.DAY:
        pixels = day
    else:
        pixels = night_base_from_day(day, config.night)
        _add_lights(pixels, layout, config.night)
        if config.noise_sigma > 0:
            noise_rng = np.random.default_rng([config.seed & 0x7FFFFFFF, int(seed), 1])
            pixels = pixels + noise_rng.normal(0.0, config.noise_sigma, pixels.shape).astype(np.float32)
        pixels = np.clip(pixels, 0.0, 1.0)

    annotations = [Annotation(car.box) for car in layout.cars]
    return Sample(
        image=ImageBuffer(pixels.astype(np.float32), ValueRange.UNIT01),
        annotations=annotations,
        domain=domain,
        authenticity=Authenticity.REAL,
        id=f"{domain.value}-{int(seed):06d}",
    )


_SPLIT_ORDER = (SplitName.TRAIN_DAY, SplitName.TRAIN_NIGHT, SplitName.TEST_DAY, SplitName.TEST_NIGHT)
_SPLIT_DOMAIN = {
    SplitName.TRAIN_DAY: Domain.DAY,
    SplitName.TRAIN_NIGHT: Domain.NIGHT,
    SplitName.TEST_DAY: Domain.DAY,
    SplitName.TEST_NIGHT: Domain.NIGHT,
}


def generate_splits(config: SceneConfig, per_split: int) -> dict[SplitName, DatasetSplit]:
    """Four disjoint-seed splits: train-day, train-night, test-day, test-night."""
    if per_split < 1:
        raise ConfigurationError("per_split must be >= 1")
    config.validate()
    splits = {}
    for k, name in enumerate(_SPLIT_ORDER):
        seeds = range(k * per_split, (k + 1) * per_split)
        samples = [generate_scene(s, _SPLIT_DOMAIN[name], config) for s in seeds]
        splits[name] = DatasetSplit(name=name, samples=samples, seed=config.seed)
    return splits
