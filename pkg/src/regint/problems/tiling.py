"""Wang-tile tilings of bounded squares and corridors.

A tile (w, n, e, s) is a unit square with west/north/east/south edge
colors; neighbouring tiles must agree on the shared edge.  Instances
preset color sequences on the region borders: all four for an n×n
bounded square, top and bottom only for a width-n corridor whose height
is existentially quantified.

Grids are indexed grid[row][column] with row 0 at the bottom; border
colorings read left to right, and the side colorings of a bounded
instance bottom to top.

A word encodes an instance as tile set and colorings joined by '$':
tiles are ';'-separated, 'w,n,e,s' each; coloring entries are
'#'-separated.  Bounded words carry l$t$r$b, corridor words t$b.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from ..errors import MalformedInputError, MalformedWordError, ResourceLimitError

_DELIMITERS = set(",;$#")


class TileType(NamedTuple):
    w: str
    n: str
    e: str
    s: str


@dataclass(frozen=True)
class TileSet:
    """Tiles plus the distinguished colors of the machine construction.

    The distinguished colors are None on tile sets reconstructed from
    words, where the encoding does not identify them; solving never
    consults them.
    """

    tiles: tuple[TileType, ...]
    colors: frozenset[str]
    white: Optional[str] = None
    blank: Optional[str] = None
    accept: Optional[str] = None

    def __post_init__(self):
        for i, tile in enumerate(self.tiles):
            for color in tile:
                if color not in self.colors:
                    raise MalformedInputError(f"tiles[{i}]: color {color!r} not declared")
        for name in ("white", "blank", "accept"):
            value = getattr(self, name)
            if value is not None and value not in self.colors:
                raise MalformedInputError(f"{name}: color {value!r} not declared")


@dataclass(frozen=True)
class TilingInstance:
    variant: str
    tile_set: TileSet
    width: int
    l: Optional[tuple[str, ...]]
    t: tuple[str, ...]
    r: Optional[tuple[str, ...]]
    b: tuple[str, ...]

    def __post_init__(self):
        if self.variant not in ("bounded", "corridor"):
            raise MalformedInputError(f"variant: expected 'bounded' or 'corridor', got {self.variant!r}")
        if self.width < 1:
            raise MalformedInputError("width: must be at least 1")
        sides = ("l", "t", "r", "b") if self.variant == "bounded" else ("t", "b")
        for name in sides:
            coloring = getattr(self, name)
            if coloring is None or len(coloring) != self.width:
                raise MalformedInputError(f"{name}: expected a coloring of length {self.width}")
            for color in coloring:
                if color not in self.tile_set.colors:
                    raise MalformedInputError(f"{name}: color {color!r} not declared")
        if self.variant == "corridor" and not (self.l is None and self.r is None):
            raise MalformedInputError("l/r: corridor instances have no side colorings")


@dataclass(frozen=True)
class Tiling:
    """grid[row][column] = tile index, row 0 at the bottom."""

    width: int
    height: int
    grid: tuple[tuple[int, ...], ...]


def validate_tiling(instance: TilingInstance, tiling: Tiling) -> list[str]:
    """All edge-matching and border violations, empty when valid.

    Kept independent of the solvers on purpose: it checks a finished
    grid directly against the matching rules and the borders.
    """
    problems = []
    tiles = instance.tile_set.tiles
    n, h = tiling.width, tiling.height
    if n != instance.width:
        problems.append(f"width {n} != instance width {instance.width}")
        return problems
    if instance.variant == "bounded" and h != instance.width:
        problems.append(f"bounded tiling must be square, got height {h}")
        return problems
    if len(tiling.grid) != h or any(len(row) != n for row in tiling.grid):
        problems.append("grid shape does not match width/height")
        return problems
    for j, row in enumerate(tiling.grid):
        for i, idx in enumerate(row):
            if not 0 <= idx < len(tiles):
                problems.append(f"cell ({i},{j}): tile index {idx} out of range")
                return problems
    for j in range(h):
        for i in range(n):
            tile = tiles[tiling.grid[j][i]]
            if i + 1 < n and tile.e != tiles[tiling.grid[j][i + 1]].w:
                problems.append(f"cell ({i},{j}): east {tile.e!r} != west of ({i + 1},{j})")
            if j + 1 < h and tile.n != tiles[tiling.grid[j + 1][i]].s:
                problems.append(f"cell ({i},{j}): north {tile.n!r} != south of ({i},{j + 1})")
    for i in range(n):
        south = tiles[tiling.grid[0][i]].s
        if south != instance.b[i]:
            problems.append(f"bottom border at column {i}: {south!r} != {instance.b[i]!r}")
        north = tiles[tiling.grid[h - 1][i]].n
        if north != instance.t[i]:
            problems.append(f"top border at column {i}: {north!r} != {instance.t[i]!r}")
    if instance.variant == "bounded":
        for j in range(h):
            west = tiles[tiling.grid[j][0]].w
            if west != instance.l[j]:
                problems.append(f"left border at row {j}: {west!r} != {instance.l[j]!r}")
            east = tiles[tiling.grid[j][n - 1]].e
            if east != instance.r[j]:
                problems.append(f"right border at row {j}: {east!r} != {instance.r[j]!r}")
    return problems


def solve_bounded_tiling(instance: TilingInstance) -> Optional[Tiling]:
    """First tiling in cell-by-cell backtracking order, or None.

    Cells are filled row-major from the bottom-left; each placement is
    constrained by the south and west edges already fixed and, on the
    last column and row, by the r and t colorings.
    """
    if instance.variant != "bounded":
        raise MalformedInputError("variant: solve_bounded_tiling needs a bounded instance")
    n = instance.width
    tiles = instance.tile_set.tiles
    by_ws: dict[tuple[str, str], list[int]] = {}
    for idx, tile in enumerate(tiles):
        by_ws.setdefault((tile.w, tile.s), []).append(idx)

    grid = [[-1] * n for _ in range(n)]

    def place(cell: int) -> bool:
        if cell == n * n:
            return True
        j, i = divmod(cell, n)
        west = instance.l[j] if i == 0 else tiles[grid[j][i - 1]].e
        south = instance.b[i] if j == 0 else tiles[grid[j - 1][i]].n
        for idx in by_ws.get((west, south), ()):
            tile = tiles[idx]
            if i == n - 1 and tile.e != instance.r[j]:
                continue
            if j == n - 1 and tile.n != instance.t[i]:
                continue
            grid[j][i] = idx
            if place(cell + 1):
                return True
        grid[j][i] = -1
        return False

    if not place(0):
        return None
    return Tiling(n, n, tuple(tuple(row) for row in grid))


def solve_corridor_tiling(
    instance: TilingInstance, max_nodes: int = 200_000
) -> Optional[tuple[int, Tiling]]:
    """Minimal corridor height and a witness tiling, or None.

    Breadth-first over rows: a row is any horizontally matching tile
    sequence (side edges unconstrained); its south colors must equal
    the previous row's north colors (the b coloring for the first row);
    the goal is a row whose north colors equal t.  The search state is
    the north color vector, so the level at which t first appears is
    the minimal height.  Raises ResourceLimitError past max_nodes
    explored rows rather than answering wrongly.
    """
    if instance.variant != "corridor":
        raise MalformedInputError("variant: solve_corridor_tiling needs a corridor instance")
    n = instance.width
    tiles = instance.tile_set.tiles
    by_s: dict[str, list[int]] = {}
    by_sw: dict[tuple[str, str], list[int]] = {}
    for idx, tile in enumerate(tiles):
        by_s.setdefault(tile.s, []).append(idx)
        by_sw.setdefault((tile.s, tile.w), []).append(idx)
    budget = [max_nodes]

    def rows_over(south: tuple[str, ...]):
        row: list[int] = []

        def extend(i: int):
            if i == n:
                budget[0] -= 1
                if budget[0] < 0:
                    raise ResourceLimitError("corridor row cap exceeded")
                yield tuple(row)
                return
            if i == 0:
                candidates = by_s.get(south[0], ())
            else:
                candidates = by_sw.get((south[i], tiles[row[i - 1]].e), ())
            for idx in candidates:
                row.append(idx)
                yield from extend(i + 1)
                row.pop()

        yield from extend(0)

    parent: dict[tuple[str, ...], tuple[Optional[tuple[str, ...]], tuple[int, ...]]] = {}
    frontier: list[tuple[str, ...]] = []
    for row in rows_over(instance.b):
        north = tuple(tiles[idx].n for idx in row)
        if north not in parent:
            parent[north] = (None, row)
            frontier.append(north)
    height = 1
    while True:
        for vector in frontier:
            if vector == instance.t:
                rows = []
                cursor: Optional[tuple[str, ...]] = vector
                while cursor is not None:
                    prev, row = parent[cursor]
                    rows.append(row)
                    cursor = prev
                rows.reverse()
                return height, Tiling(n, height, tuple(rows))
        nxt: list[tuple[str, ...]] = []
        for vector in frontier:
            for row in rows_over(vector):
                north = tuple(tiles[idx].n for idx in row)
                if north not in parent:
                    parent[north] = (vector, row)
                    nxt.append(north)
        if not nxt:
            return None
        frontier = nxt
        height += 1


# --------------------------------------------------------------------------
# Word encoding


def serialize_tile_set(tile_set: TileSet) -> str:
    """';'-joined tiles, each 'w,n,e,s', in declaration order."""
    for i, tile in enumerate(tile_set.tiles):
        for color in tile:
            if not color or set(color) & _DELIMITERS:
                raise MalformedInputError(
                    f"tiles[{i}]: color {color!r} cannot be serialized (empty or contains a delimiter)"
                )
    return ";".join(",".join(tile) for tile in tile_set.tiles)


def _parse_tiles(field: str) -> tuple[TileType, ...]:
    tiles = []
    for chunk in field.split(";"):
        parts = chunk.split(",")
        if len(parts) != 4 or any(not p for p in parts):
            raise MalformedWordError(f"bad tile {chunk!r}: expected 'w,n,e,s'")
        tiles.append(TileType(*parts))
    return tuple(tiles)


def _parse_coloring(field: str) -> tuple[str, ...]:
    entries = tuple(field.split("#"))
    if any(not entry for entry in entries):
        raise MalformedWordError(f"bad coloring {field!r}: empty entry")
    return entries


def parse_tiling_word(word: str) -> TilingInstance:
    """Decode a bounded (T$l$t$r$b) or corridor (T$t$b) instance word."""
    fields = word.split("$")
    if len(fields) == 5:
        variant = "bounded"
        tiles = _parse_tiles(fields[0])
        colorings = [_parse_coloring(f) for f in fields[1:]]
        l, t, r, b = colorings
    elif len(fields) == 3:
        variant = "corridor"
        tiles = _parse_tiles(fields[0])
        t, b = _parse_coloring(fields[1]), _parse_coloring(fields[2])
        l = r = None
    else:
        raise MalformedWordError(f"expected 2 or 4 '$' separators, got {len(fields) - 1}")
    widths = {len(c) for c in ((l, t, r, b) if variant == "bounded" else (t, b)) if c is not None}
    if len(widths) != 1:
        raise MalformedWordError(f"coloring lengths differ: {sorted(widths)}")
    colors = frozenset(c for tile in tiles for c in tile) | frozenset(
        entry for coloring in (l, t, r, b) if coloring for entry in coloring
    )
    tile_set = TileSet(tiles=tiles, colors=colors)
    try:
        return TilingInstance(variant, tile_set, widths.pop(), l, t, r, b)
    except MalformedInputError as exc:
        raise MalformedWordError(str(exc)) from exc


def instance_to_word(instance: TilingInstance) -> str:
    for name in ("l", "t", "r", "b"):
        coloring = getattr(instance, name)
        for entry in coloring or ():
            if not entry or set(entry) & _DELIMITERS:
                raise MalformedInputError(f"{name}: color {entry!r} cannot be serialized")
    fields = [serialize_tile_set(instance.tile_set)]
    sides = ("l", "t", "r", "b") if instance.variant == "bounded" else ("t", "b")
    fields.extend("#".join(getattr(instance, name)) for name in sides)
    return "$".join(fields)


def member_bounded_tiling(word: str) -> bool:
    """Does the word encode a solvable bounded instance?"""
    try:
        instance = parse_tiling_word(word)
    except MalformedWordError:
        return False
    if instance.variant != "bounded":
        return False
    return solve_bounded_tiling(instance) is not None


def member_corridor_tiling(word: str, max_nodes: int = 200_000) -> bool:
    """Does the word encode a corridor instance tileable at some height?"""
    try:
        instance = parse_tiling_word(word)
    except MalformedWordError:
        return False
    if instance.variant != "corridor":
        return False
    return solve_corridor_tiling(instance, max_nodes=max_nodes) is not None


# --------------------------------------------------------------------------
# JSON wire format


def tile_set_to_json(tile_set: TileSet) -> dict:
    return {
        "colors": sorted(tile_set.colors),
        "white": tile_set.white,
        "blank": tile_set.blank,
        "accept": tile_set.accept,
        "tiles": [{"w": t.w, "n": t.n, "e": t.e, "s": t.s} for t in tile_set.tiles],
    }


def tile_set_from_json(obj: object) -> TileSet:
    if not isinstance(obj, dict):
        raise MalformedInputError("document: expected a JSON object")
    colors = obj.get("colors")
    if not isinstance(colors, list) or not all(isinstance(c, str) for c in colors):
        raise MalformedInputError("colors: expected a list of strings")
    raw = obj.get("tiles")
    if not isinstance(raw, list):
        raise MalformedInputError("tiles: expected a list")
    tiles = []
    for i, entry in enumerate(raw):
        if not isinstance(entry, dict) or not all(k in entry for k in ("w", "n", "e", "s")):
            raise MalformedInputError(f"tiles[{i}]: expected an object with w/n/e/s")
        tiles.append(TileType(entry["w"], entry["n"], entry["e"], entry["s"]))
    for key in ("white", "blank", "accept"):
        value = obj.get(key)
        if value is not None and not isinstance(value, str):
            raise MalformedInputError(f"{key}: expected a string or null")
    return TileSet(
        tiles=tuple(tiles),
        colors=frozenset(colors),
        white=obj.get("white"),
        blank=obj.get("blank"),
        accept=obj.get("accept"),
    )


def tiling_instance_to_json(instance: TilingInstance) -> dict:
    out = tile_set_to_json(instance.tile_set)
    out["variant"] = instance.variant
    out["width"] = instance.width
    for name in ("l", "t", "r", "b"):
        coloring = getattr(instance, name)
        out[name] = None if coloring is None else list(coloring)
    return out


def tiling_instance_from_json(obj: object) -> TilingInstance:
    tile_set = tile_set_from_json(obj)
    variant = obj.get("variant")
    if variant not in ("bounded", "corridor"):
        raise MalformedInputError("variant: expected 'bounded' or 'corridor'")
    width = obj.get("width")
    if not isinstance(width, int) or isinstance(width, bool):
        raise MalformedInputError("width: expected an integer")
    colorings = {}
    for name in ("l", "t", "r", "b"):
        value = obj.get(name)
        if value is not None and (
            not isinstance(value, list) or not all(isinstance(c, str) for c in value)
        ):
            raise MalformedInputError(f"{name}: expected a list of strings or null")
        colorings[name] = None if value is None else tuple(value)
    return TilingInstance(variant, tile_set, width, colorings["l"], colorings["t"], colorings["r"], colorings["b"])
