"""Block embeddings of tensors into direct sums E = V0 (+) V1 (+) ..."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import SignatureMismatch
from .tensorkit import Space, Tensor, _zeros


def direct_sum_space(name: str, parts: Sequence[tuple[str, Space]]) -> tuple[Space, dict[str, tuple[int, int]]]:
    """Build the sum space with tagged basis labels and return it together with
    {tag: (offset, dim)} block coordinates."""
    labels: list[str] = []
    blocks: dict[str, tuple[int, int]] = {}
    for tag, sp in parts:
        blocks[tag] = (len(labels), sp.dim)
        labels += [f"{tag}.{l}" for l in sp.basis_labels]
    return Space(name, len(labels), tuple(labels)), blocks


def embed_block(t: Tensor, dom_tags: Sequence[str], cod_tags: Sequence[str],
                total: Space, blocks: dict[str, tuple[int, int]]) -> Tensor:
    """Place `t` into the corresponding block of a tensor over the sum space."""
    if len(dom_tags) != len(t.dom) or len(cod_tags) != len(t.cod):
        raise SignatureMismatch("tag lists must match tensor arity")
    n = len(dom_tags) + len(cod_tags)
    arr = _zeros((total.dim,) * n)
    slices = tuple(slice(blocks[tag][0], blocks[tag][0] + blocks[tag][1])
                   for tag in tuple(dom_tags) + tuple(cod_tags))
    arr[slices] = t.data
    return Tensor((total,) * len(dom_tags), (total,) * len(cod_tags), arr)


def extract_block(t: Tensor, dom_tags: Sequence[str], cod_tags: Sequence[str],
                  dom_spaces: Sequence[Space], cod_spaces: Sequence[Space],
                  blocks: dict[str, tuple[int, int]]) -> Tensor:
    """Read one block of a tensor over the sum space back onto component spaces."""
    slices = tuple(slice(blocks[tag][0], blocks[tag][0] + blocks[tag][1])
                   for tag in tuple(dom_tags) + tuple(cod_tags))
    data = np.ascontiguousarray(t.data[slices])
    return Tensor(tuple(dom_spaces), tuple(cod_spaces), data)


def block_sum(total: Space, dom_arity: int, cod_arity: int,
              pieces: Sequence[tuple[Sequence[str], Sequence[str], Tensor]],
              blocks: dict[str, tuple[int, int]]) -> Tensor:
    """Sum of several embedded blocks (blocks may not overlap meaningfully;
    overlapping contributions add)."""
    out = Tensor.zero((total,) * dom_arity, (total,) * cod_arity)
    for dom_tags, cod_tags, t in pieces:
        out = out + embed_block(t, dom_tags, cod_tags, total, blocks)
    return out
