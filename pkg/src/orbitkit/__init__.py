"""Semi-Kähler structures on (co)adjoint orbits of real Lie algebras."""

__version__ = "0.1.0"
