"""Validated run configuration built from command-line arguments."""
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

from core.settings import SearchLimits, get_settings


class RunConfig(BaseModel):
    command: Literal["stats", "solve", "kernel", "render"]
    input: Path
    style: Literal["1page", "2page"] = "1page"
    objective: Literal["crossings", "crossed-edges"] = "crossings"
    engine: Literal["auto", "sjt", "enumeration", "matmult"] = "auto"
    json_output: bool = False
    budget: Optional[int] = Field(None, ge=1)
    threads: Optional[int] = Field(None, ge=1)
    output: Optional[Path] = None
    layout: Optional[Path] = None
    solve: bool = False

    @model_validator(mode="after")
    def _check_engine(self) -> 'RunConfig':
        if self.engine == "matmult" and self.objective == "crossed-edges":
            raise ValueError("the matmult engine only minimizes crossings")
        if self.engine == "sjt" and self.style == "2page":
            raise ValueError("the sjt engine only solves 1-page layouts")
        if self.engine == "enumeration" and self.style == "1page":
            raise ValueError("the enumeration engine only solves 2-page layouts")
        if self.command == "render" and self.layout is None and not self.solve:
            raise ValueError("render needs --layout PATH or --solve")
        return self

    def limits(self) -> SearchLimits:
        """Stored limits with this run's flags on top."""
        return get_settings().search_limits(budget=self.budget, threads=self.threads)
