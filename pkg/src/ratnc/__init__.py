"""Rational (a,b)-noncrossing partitions with exact arithmetic and brute-force oracles."""

from .errors import RatNCError, ResourceLimit
from .membership import BlockRef, Verdict, absorb_q_block, is_member, merge_p_blocks, oracle_member
from .partitions import (
    LabeledNCPair,
    SetPartition,
    enumerate_nc,
    kreweras,
    pair_to_path,
    pi_map,
    rank_sequences,
    reflect_pair,
    rotate_pair,
)
from .paths import CoprimePair, DyckPath, catalan, enumerate_paths, fire_laser, laser_set, rot_prime, transpose, validate

__all__ = [
    "BlockRef",
    "CoprimePair",
    "DyckPath",
    "LabeledNCPair",
    "RatNCError",
    "ResourceLimit",
    "SetPartition",
    "Verdict",
    "absorb_q_block",
    "catalan",
    "enumerate_nc",
    "enumerate_paths",
    "fire_laser",
    "is_member",
    "kreweras",
    "laser_set",
    "merge_p_blocks",
    "oracle_member",
    "pair_to_path",
    "pi_map",
    "rank_sequences",
    "reflect_pair",
    "rot_prime",
    "rotate_pair",
    "transpose",
    "validate",
]
