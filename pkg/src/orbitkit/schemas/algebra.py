"""Algebra file schema."""

from pydantic import BaseModel, Field, model_validator


class AlgebraFile(BaseModel):
    """Sparse structure constants; `c` lists [i, j, k, value] with i < j (0-based)."""

    name: str
    dim: int = Field(ge=1, le=64)
    basis: list[str]
    c: list[tuple[int, int, int, float]] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_entries(self) -> "AlgebraFile":
        if len(self.basis) != self.dim:
            raise ValueError(f"basis has {len(self.basis)} labels, dim is {self.dim}")
        seen: set[tuple[int, int, int]] = set()
        for i, j, k, _ in self.c:
            if not (0 <= i < j < self.dim and 0 <= k < self.dim):
                raise ValueError(f"entry ({i}, {j}, {k}) must satisfy 0 <= i < j < dim, 0 <= k < dim")
            if (i, j, k) in seen:
                raise ValueError(f"duplicate entry ({i}, {j}, {k})")
            seen.add((i, j, k))
        return self
