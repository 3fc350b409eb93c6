# -*- coding: utf-8 -*-
from dataclasses import dataclass
from enum import Enum
from typing import Optional


class CausalTag(Enum):
    """Sign class of <x, x>."""
    TIMELIKE = 'timelike'
    SPACELIKE = 'spacelike'
    LIGHTLIKE = 'lightlike'


class Sheet(Enum):
    """Sign of x_0 for a timelike vector."""
    UPPER = 'upper'
    LOWER = 'lower'


@dataclass(frozen=True)
class CausalClass:
    tag: CausalTag
    sheet: Optional[Sheet] = None

    def __post_init__(self):
        if (self.tag is CausalTag.TIMELIKE) != (self.sheet is not None):
            raise ValueError(f'Sheet is recorded for timelike vectors only: {self.tag}, {self.sheet}')

    @property
    def timelike(self) -> bool:
        return self.tag is CausalTag.TIMELIKE

    @property
    def spacelike(self) -> bool:
        return self.tag is CausalTag.SPACELIKE

    @property
    def lightlike(self) -> bool:
        return self.tag is CausalTag.LIGHTLIKE

    def __str__(self):
        if self.sheet is None:
            return self.tag.value
        return f'{self.tag.value}/{self.sheet.value}'
