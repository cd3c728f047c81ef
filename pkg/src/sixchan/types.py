"""Core domain types: images, boxes, annotations, samples, splits."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import DimensionError


class ValueRange(enum.Enum):
    UNIT01 = "unit01"  # values in [0, 1]
    SYM11 = "sym11"    # values in [-1, 1]


class Domain(enum.Enum):
    DAY = "day"
    NIGHT = "night"

    def flipped(self) -> "Domain":
        return Domain.NIGHT if self is Domain.DAY else Domain.DAY


class Authenticity(enum.Enum):
    REAL = "real"
    FAKE = "fake"


class SplitName(enum.Enum):
    TRAIN_DAY = "train_day"
    TRAIN_NIGHT = "train_night"
    TEST_DAY = "test_day"
    TEST_NIGHT = "test_night"


@dataclass
class ImageBuffer:
    """H x W x C float32 raster with a declared value range."""

    data: np.ndarray
    value_range: ValueRange = ValueRange.UNIT01

    def __post_init__(self):
        if self.data.ndim != 3:
            raise DimensionError(f"image data must be HxWxC, got shape {self.data.shape}")
        if self.data.dtype != np.float32:
            self.data = self.data.astype(np.float32)

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]

    @property
    def channels(self) -> int:
        return self.data.shape[2]

    def validate(self) -> None:
        lo, hi = (0.0, 1.0) if self.value_range is ValueRange.UNIT01 else (-1.0, 1.0)
        dmin, dmax = float(self.data.min()), float(self.data.max())
        if dmin < lo - 1e-6 or dmax > hi + 1e-6:
            raise DimensionError(
                f"values [{dmin:.4f}, {dmax:.4f}] outside declared range {self.value_range.value}"
            )

    def to_sym11(self) -> "ImageBuffer":
        if self.value_range is ValueRange.SYM11:
            return self
        return ImageBuffer(self.data * 2.0 - 1.0, ValueRange.SYM11)

    def to_unit01(self) -> "ImageBuffer":
        if self.value_range is ValueRange.UNIT01:
            return self
        return ImageBuffer((self.data + 1.0) * 0.5, ValueRange.UNIT01)

    def copy(self) -> "ImageBuffer":
        return ImageBuffer(self.data.copy(), self.value_range)


def image_from_uint8(pixels: np.ndarray) -> ImageBuffer:
    """8-bit pixels -> UNIT01 buffer (divide by 255)."""
    return ImageBuffer(pixels.astype(np.float32) / 255.0, ValueRange.UNIT01)


def image_to_uint8(image: ImageBuffer) -> np.ndarray:
    arr = image.to_unit01().data
    return np.clip(np.rint(arr * 255.0), 0, 255).astype(np.uint8)


@dataclass(frozen=True)
class BBox:
    """Axis-aligned box in continuous pixel coordinates."""

    x_min: float
    y_min: float
    x_max: float
    y_max: float

    def __post_init__(self):
        if not (self.x_min < self.x_max and self.y_min < self.y_max):
            raise DimensionError(f"degenerate box {self.as_tuple()}")

    def as_tuple(self):
        return (self.x_min, self.y_min, self.x_max, self.y_max)

    @property
    def width(self) -> float:
        return self.x_max - self.x_min

    @property
    def height(self) -> float:
        return self.y_max - self.y_min

    @property
    def area(self) -> float:
        return self.width * self.height

    def inside(self, width: float, height: float) -> bool:
        return 0 <= self.x_min and 0 <= self.y_min and self.x_max <= width and self.y_max <= height


CAR_CLASS_ID = 0


@dataclass(frozen=True)
class Annotation:
    box: BBox
    class_id: int = CAR_CLASS_ID


@dataclass
class Sample:
    image: ImageBuffer
    annotations: list[Annotation]
    domain: Domain
    authenticity: Authenticity
    id: str
    extra: dict = field(default_factory=dict)

    def boxes_array(self) -> np.ndarray:
        """(N, 4) float32 array of annotation boxes."""
        if not self.annotations:
            return np.zeros((0, 4), dtype=np.float32)
        return np.array([a.box.as_tuple() for a in self.annotations], dtype=np.float32)

    def validate(self) -> None:
        self.image.validate()
        for ann in self.annotations:
            if not ann.box.inside(self.image.width, self.image.height):
                raise DimensionError(f"annotation {ann.box.as_tuple()} outside image in sample {self.id}")


@dataclass
class DatasetSplit:
    name: SplitName
    samples: list[Sample]
    seed: int
    extra: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.samples)

    def ids(self) -> list[str]:
        return [s.id for s in self.samples]


def boxes_to_array(boxes) -> np.ndarray:
    """List of BBox (or 4-tuples) -> (N, 4) float array."""
    if len(boxes) == 0:
        return np.zeros((0, 4), dtype=np.float64)
    rows = [b.as_tuple() if isinstance(b, BBox) else tuple(b) for b in boxes]
    return np.asarray(rows, dtype=np.float64)


def sample_with(sample: Sample, **changes) -> Sample:
    return replace(sample, **changes)
