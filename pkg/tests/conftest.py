"""Shared numeric helpers for the test suite."""


def assert_close(actual: float, expected: float, rel: float, scale: float = 1.0) -> None:
    """|actual - expected| <= rel * max(1, scale, |expected|)."""
    bound = rel * max(1.0, scale, abs(expected))
    assert abs(actual - expected) <= bound, (
        f"{actual!r} != {expected!r} within {bound:g} (rel={rel:g}, scale={scale:g})"
    )


def comp_scale(*numbers) -> float:
    """Conditioning scale for componentwise comparisons: prod(1 + max|component|)."""
    s = 1.0
    for w in numbers:
        s *= 1.0 + max(abs(w.x), abs(w.y))
    return s
