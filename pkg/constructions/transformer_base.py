"""
Abstract Base Class for transformation engines
Provides a common interface for every constructive upper-bound method
"""

import logging
from abc import ABC, abstractmethod
from typing import Optional

from pydantic import BaseModel, ConfigDict

from graphs.model import Graph, InversionSequence, Orientation, Realisation
from graphs.operations import drop_idle_sets, realisation_to_sequence
from constructions.witness import checked_sequence
from utils.errors import PreconditionError

logger = logging.getLogger(__name__)


class TransformOutcome(BaseModel):
    """Result of one engine run, successful or not"""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    success: bool
    method: str
    sequence: Optional[InversionSequence] = None
    realisation: Optional[Realisation] = None
    bound: Optional[int] = None
    message: str = ""


class TransformerBase(ABC):
    """
    Abstract base class for transformation engines
    Defines the common interface that all engines must follow
    """

    name: str = "base"
    description: str = ""

    @abstractmethod
    def applicable(self, graph: Graph) -> Optional[str]:
        """
        Check the engine's hypothesis on a graph

        Args:
            graph: Graph the orientations live on

        Returns:
            None if the engine applies, otherwise the reason it does not
        """
        pass

    @abstractmethod
    def bound(self, graph: Graph) -> int:
        """
        Number of inversions the engine guarantees on an applicable graph
        """
        pass

    @abstractmethod
    def transform(self, O1: Orientation, O2: Orientation) -> tuple[InversionSequence, Optional[Realisation]]:
        """
        Build an inversion sequence from O1 to O2

        Args:
            O1: Starting orientation
            O2: Target orientation on the same graph

        Returns:
            The sequence, and the realisation it was read from (if any)

        Raises:
            PreconditionError: If the engine's hypothesis fails
        """
        pass

    def execute(self, O1: Orientation, O2: Orientation) -> TransformOutcome:
        """Run the engine and wrap the result.

        Args:
            O1: Starting orientation
            O2: Target orientation

        Returns:
            TransformOutcome with success flag, witness and message
        """
        reason = self.applicable(O1.graph)
        if reason is not None:
            logger.error(f"{self.name} does not apply: {reason}")
            return TransformOutcome(success=False, method=self.name, message=f"✗ {self.name} does not apply: {reason}")
        try:
            sequence, realisation = self.transform(O1, O2)
        except PreconditionError as e:
            logger.error(f"{self.name} failed: {e}")
            return TransformOutcome(success=False, method=self.name, message=f"✗ {self.name} failed: {e}")
        bound = self.bound(O1.graph)
        return TransformOutcome(
            success=True,
            method=self.name,
            sequence=sequence,
            realisation=realisation,
            bound=bound,
            message=f"✓ {self.name}: {len(sequence)} inversion(s) (guaranteed at most {bound})",
        )

    @staticmethod
    def sequence_from_realisation(O1: Orientation, O2: Orientation, realisation: Realisation, engine: str) -> InversionSequence:
        """Coordinate sets of a realisation, without the sets that flip nothing."""
        sequence = drop_idle_sets(O1.graph, realisation_to_sequence(realisation))
        return checked_sequence(O1, sequence, O2, engine)
