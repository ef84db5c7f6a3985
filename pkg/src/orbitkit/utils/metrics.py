"""Prometheus metrics for verification runs."""

from pathlib import Path

from prometheus_client import Counter, Histogram, write_to_textfile
from prometheus_client.core import CollectorRegistry

registry = CollectorRegistry()

checks_total = Counter(
    "orbitkit_checks_total",
    "Total number of acceptance checks evaluated",
    ["criterion", "outcome"],
    registry=registry,
)

check_duration_seconds = Histogram(
    "orbitkit_check_duration_seconds",
    "Wall time spent per acceptance criterion",
    ["criterion"],
    buckets=[0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 15.0, 60.0],
    registry=registry,
)

haar_samples_total = Counter(
    "orbitkit_haar_samples_total",
    "Total number of Haar-distributed group elements drawn",
    registry=registry,
)


def write_metrics(path: str | Path) -> None:
    write_to_textfile(str(path), registry)
