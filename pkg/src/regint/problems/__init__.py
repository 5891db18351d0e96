"""Membership checkers and solvers for the studied problem languages.

Every member_* function is total on arbitrary words: malformed or
out-of-alphabet input is a non-member, never an exception, because the
witness-search harness feeds these checkers raw enumerated words.
Resource-capped checkers raise ResourceLimitError rather than guess.
"""

from .strings import (
    interleave,
    member_sequential_string_eq,
    member_shuffled_regex_eq,
    member_shuffled_string_eq,
    pad_to_common,
)
from .bpcp import (
    BpcpSolution,
    PcpInstance,
    bin_decode,
    bin_encode,
    check_bpcp,
    member_bpcp,
    parse_bpcp_word,
    pcp_from_json,
    pcp_to_json,
)
from .machines import (
    MachineWord,
    TmSpec,
    decode_tm,
    encode_tm,
    member_machine_language,
    parse_machine_word,
    tm_from_json,
    tm_to_json,
)
from .tiling import (
    TileSet,
    TileType,
    Tiling,
    TilingInstance,
    instance_to_word,
    member_bounded_tiling,
    member_corridor_tiling,
    parse_tiling_word,
    serialize_tile_set,
    solve_bounded_tiling,
    solve_corridor_tiling,
    tile_set_from_json,
    tile_set_to_json,
    tiling_instance_from_json,
    tiling_instance_to_json,
    validate_tiling,
)

__all__ = [
    "BpcpSolution",
    "MachineWord",
    "PcpInstance",
    "TileSet",
    "TileType",
    "Tiling",
    "TilingInstance",
    "TmSpec",
    "bin_decode",
    "bin_encode",
    "check_bpcp",
    "decode_tm",
    "encode_tm",
    "instance_to_word",
    "interleave",
    "member_bounded_tiling",
    "member_bpcp",
    "member_corridor_tiling",
    "member_machine_language",
    "member_sequential_string_eq",
    "member_shuffled_regex_eq",
    "member_shuffled_string_eq",
    "pad_to_common",
    "parse_bpcp_word",
    "parse_machine_word",
    "parse_tiling_word",
    "pcp_from_json",
    "pcp_to_json",
    "serialize_tile_set",
    "solve_bounded_tiling",
    "solve_corridor_tiling",
    "tile_set_from_json",
    "tile_set_to_json",
    "tiling_instance_from_json",
    "tiling_instance_to_json",
    "tm_from_json",
    "tm_to_json",
    "validate_tiling",
]
