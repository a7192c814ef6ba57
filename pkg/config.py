"""BookCross configuration constants."""

APP_NAME = "BookCross"
APP_VERSION = "0.1.0"

# Environment
BUDGET_ENV_VAR = "BOOKCROSS_BUDGET"
SLOW_TESTS_ENV_VAR = "BOOKCROSS_SLOW_TESTS"

# Search caps (kernel sizes)
DEFAULT_MAX_VERTICES_1PAGE = 13
DEFAULT_MAX_VERTICES_2PAGE = 12
DEFAULT_MAX_EDGES_2PAGE = 20
DEFAULT_MAX_VERTICES_MATMULT = 9
DEFAULT_THREADS = 1

# Styles and objectives
STYLES = ["1page", "2page"]
OBJECTIVES = ["crossings", "crossed-edges"]
ENGINES = ["auto", "sjt", "enumeration", "matmult"]

# Sunburst geometry
SVG_INNER_RADIUS = 120
SVG_RING_SPACING = 40
SVG_MARGIN = 40
SVG_VERTEX_RADIUS = 5
SVG_OUTER_ARC_BULGE = 0.35

# Colours
PAGE_COLORS = {
    0: "#4A90D9",
    1: "#E67E22",
}

VERTEX_COLORS = {
    "core": "#2C3E50",
    "tree": "#27AE60",
}

TREE_EDGE_COLOR = "#95A5A6"
BACKGROUND_COLOR = "#F5F5F5"
