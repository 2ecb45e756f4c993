"""Load the regression census of named instances from YAML."""

import yaml
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional
from dataclasses import dataclass, field

from graphs.generators import GeneratedInstance, generate

logger = logging.getLogger(__name__)


@dataclass
class CensusEntry:
    """Named instance with the values the exact engines must reproduce."""

    id: str
    name: str
    family: str
    params: List[Any]
    seed: int = 0
    expected: Dict[str, int] = field(default_factory=dict)
    tags: List[str] = field(default_factory=list)

    @staticmethod
    def from_dict(data: Dict[str, Any]) -> "CensusEntry":
        """Create CensusEntry from dictionary."""
        return CensusEntry(
            id=str(data.get("id", "unknown")),
            name=data.get("name", ""),
            family=data["family"],
            params=list(data.get("params", [])),
            seed=int(data.get("seed", 0)),
            expected={k: int(v) for k, v in (data.get("expected") or {}).items()},
            tags=list(data.get("tags", [])),
        )

    def instance(self) -> GeneratedInstance:
        return generate(self.family, *self.params, seed=self.seed)


class CensusLoader:
    """Loads and filters census entries."""

    def __init__(self, census_path: str = "data/census.yaml"):
        """Initialize loader.

        Args:
            census_path: Path to YAML census file
        """
        self.census_path = Path(census_path)
        self.entries: List[CensusEntry] = []
        self.tags: Dict[str, str] = {}
        self._load()

    def _load(self) -> None:
        """Load and parse YAML file."""
        try:
            if not self.census_path.exists():
                logger.warning(f"Census file not found at {self.census_path}")
                return

            with open(self.census_path, "r", encoding="utf-8") as f:
                census = yaml.safe_load(f)

            if not census or "entries" not in census:
                logger.warning("No entries found in census file")
                return

            for tag in census.get("tags", []):
                self.tags[tag["name"]] = tag.get("description", "")

            for data in census["entries"]:
                try:
                    self.entries.append(CensusEntry.from_dict(data))
                except (KeyError, TypeError, ValueError) as e:
                    logger.error(f"Failed to load census entry {data.get('id')}: {e}")

            logger.info(f"Loaded {len(self.entries)} census entries from {self.census_path}")

        except yaml.YAMLError as e:
            logger.error(f"Failed to parse census file: {e}")
        except OSError as e:
            logger.error(f"Error reading census file: {e}")

    def get_by_tag(self, tag: str) -> List[CensusEntry]:
        return [entry for entry in self.entries if tag in entry.tags]

    def get_by_family(self, family: str) -> List[CensusEntry]:
        return [entry for entry in self.entries if entry.family == family]

    def get_entry(self, entry_id: str) -> Optional[CensusEntry]:
        """Get a specific entry by ID.

        Returns:
            CensusEntry or None if not found
        """
        for entry in self.entries:
            if entry.id == entry_id:
                return entry
        return None

    def get_statistics(self) -> Dict[str, Any]:
        """Counts of entries per family, per tag and per expected quantity."""
        family_counts: Dict[str, int] = {}
        tag_counts: Dict[str, int] = {}
        expected_counts: Dict[str, int] = {}

        for entry in self.entries:
            family_counts[entry.family] = family_counts.get(entry.family, 0) + 1
            for tag in entry.tags:
                tag_counts[tag] = tag_counts.get(tag, 0) + 1
            for key in entry.expected:
                expected_counts[key] = expected_counts.get(key, 0) + 1

        return {
            "total_entries": len(self.entries),
            "total_tags": len(self.tags),
            "family_distribution": family_counts,
            "tag_distribution": tag_counts,
            "expected_distribution": expected_counts,
        }
