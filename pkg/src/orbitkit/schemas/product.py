"""Scalar product file format."""

from pydantic import BaseModel, Field, model_validator


class ProductFile(BaseModel):
    label: str = "file"
    gram: list[list[float]] = Field(..., min_length=1)

    @model_validator(mode="after")
    def check_square_and_symmetric(self) -> "ProductFile":
        n = len(self.gram)
        for row in self.gram:
            if len(row) != n:
                raise ValueError(f"gram must be square, got a row of length {len(row)} in a {n}-row matrix")
        for i in range(n):
            for j in range(i + 1, n):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError(f"gram must be symmetric, entries ({i}, {j}) and ({j}, {i}) differ")
        return self
