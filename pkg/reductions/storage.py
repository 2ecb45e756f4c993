"""Reduction instances on disk: ``graph.el``, ``O1.or``, ``O2.or``, ``pi0.lb``, ``base.el`` and ``meta``."""

from __future__ import annotations

import hashlib
import logging
from pathlib import Path

import yaml

from graphs.io import (
    parse_graph,
    parse_labeling,
    parse_orientation,
    read_text,
    serialize_graph,
    serialize_labeling,
    serialize_orientation,
    write_text,
)
from reductions.subdivision import ReductionInstance, subdivision_instance
from utils.errors import GraphFormatError

logger = logging.getLogger(__name__)


def graph_hash(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


def save_instance(inst: ReductionInstance, directory: str | Path) -> Path:
    """Write every file of the instance; returns the directory."""
    directory = Path(directory)
    base_text = serialize_graph(inst.base_graph)
    write_text(directory / "base.el", base_text)
    write_text(directory / "graph.el", serialize_graph(inst.subdivided))
    write_text(directory / "O1.or", serialize_orientation(inst.O1))
    write_text(directory / "O2.or", serialize_orientation(inst.O2))
    write_text(directory / "pi0.lb", serialize_labeling(inst.pi0))
    meta = {
        "k": inst.k,
        "base_hash": graph_hash(base_text),
        "base_vertices": inst.base_graph.n,
        "base_edges": inst.base_graph.m,
    }
    write_text(directory / "meta", yaml.safe_dump(meta, sort_keys=False))
    return directory


def load_instance(directory: str | Path) -> ReductionInstance:
    """Rebuild an instance and check it against the stored files.

    Raises:
        GraphFormatError: If a file is missing, malformed, or disagrees with the rebuilt instance
    """
    directory = Path(directory)
    try:
        meta = yaml.safe_load(read_text(directory / "meta"))
    except yaml.YAMLError as e:
        raise GraphFormatError(f"cannot parse {directory / 'meta'}: {e}") from e
    if not isinstance(meta, dict) or "k" not in meta:
        raise GraphFormatError(f"{directory / 'meta'} has no k entry")

    base_text = read_text(directory / "base.el")
    if meta.get("base_hash") != graph_hash(base_text):
        raise GraphFormatError("base graph does not match the stored hash")
    inst = subdivision_instance(parse_graph(base_text), int(meta["k"]))

    subdivided = parse_graph(read_text(directory / "graph.el"))
    if subdivided != inst.subdivided:
        raise GraphFormatError("stored subdivision differs from the rebuilt one")
    stored = (
        parse_orientation(read_text(directory / "O1.or"), subdivided),
        parse_orientation(read_text(directory / "O2.or"), subdivided),
        parse_labeling(read_text(directory / "pi0.lb"), subdivided),
    )
    if stored != (inst.O1, inst.O2, inst.pi0):
        raise GraphFormatError("stored orientations or labeling differ from the rebuilt instance")
    logger.info(f"Loaded reduction instance from {directory} (k={inst.k})")
    return inst
