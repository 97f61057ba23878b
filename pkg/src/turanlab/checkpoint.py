"""Binary checkpoints for the exact Turán search.

Layout (all integers big-endian)::

    magic     4s   b"TLCK"
    version   u16  currently 1
    n         u16  vertex count of the search
    pattern   u32 length + bytes      canonical code of the forbidden graph
    incumbent i32  best edge count so far (-1 before any graph was seen)
    nodes     u64  nodes expanded so far
    rejected  u64  isomorphism rejections so far
    pruned    u64  subtrees cut by the edge bound
    extremal  u32 count, then per code: u16 length + bytes
    frontier  u32 count, then per graph: u16 length + graph6 bytes

Frontier graphs are stored in their working labelling; the search recomputes
their canonical codes on resume.
"""
from __future__ import annotations

import os
import struct
from dataclasses import dataclass, field
from pathlib import Path

from .errors import CheckpointError
from .graph import Graph, from_graph6, to_graph6

MAGIC = b"TLCK"
VERSION = 1


@dataclass
class Checkpoint:
    n: int
    pattern_code: bytes
    incumbent: int = -1
    nodes: int = 0
    rejected: int = 0
    pruned: int = 0
    extremal: list[bytes] = field(default_factory=list)
    frontier: list[Graph] = field(default_factory=list)


def _pack_blob(data: bytes, fmt: str) -> bytes:
    return struct.pack(fmt, len(data)) + data


def dumps(cp: Checkpoint) -> bytes:
    out = [struct.pack(">4sHH", MAGIC, VERSION, cp.n),
           _pack_blob(cp.pattern_code, ">I"),
           struct.pack(">iQQQ", cp.incumbent, cp.nodes, cp.rejected, cp.pruned),
           struct.pack(">I", len(cp.extremal))]
    out.extend(_pack_blob(code, ">H") for code in cp.extremal)
    out.append(struct.pack(">I", len(cp.frontier)))
    out.extend(_pack_blob(to_graph6(g).encode(), ">H") for g in cp.frontier)
    return b"".join(out)


def loads(data: bytes) -> Checkpoint:
    pos = 0

    def take(fmt: str) -> tuple:
        nonlocal pos
        size = struct.calcsize(fmt)
        if pos + size > len(data):
            raise CheckpointError("truncated checkpoint")
        vals = struct.unpack_from(fmt, data, pos)
        pos += size
        return vals

    def blob(fmt: str) -> bytes:
        nonlocal pos
        (length,) = take(fmt)
        if pos + length > len(data):
            raise CheckpointError("truncated checkpoint")
        out = data[pos:pos + length]
        pos += length
        return out

    magic, version, n = take(">4sHH")
    if magic != MAGIC:
        raise CheckpointError("not a turanlab checkpoint")
    if version != VERSION:
        raise CheckpointError(f"unsupported checkpoint version {version}")
    cp = Checkpoint(n, blob(">I"))
    cp.incumbent, cp.nodes, cp.rejected, cp.pruned = take(">iQQQ")
    (count,) = take(">I")
    cp.extremal = [blob(">H") for _ in range(count)]
    (count,) = take(">I")
    cp.frontier = [from_graph6(blob(">H")) for _ in range(count)]
    if pos != len(data):
        raise CheckpointError("trailing bytes in checkpoint")
    return cp


def save(cp: Checkpoint, path: str | os.PathLike) -> None:
    path = Path(path)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_bytes(dumps(cp))
    os.replace(tmp, path)


def load(path: str | os.PathLike) -> Checkpoint:
    return loads(Path(path).read_bytes())
