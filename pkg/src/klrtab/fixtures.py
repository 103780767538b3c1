"""Worked examples used by the CLI and the acceptance tests."""
from .binfinity import MLTableau
from .tableaux import Tableau

# A 15-box tableau of shape (6,4,2,2,1) in rank 5.
EXAMPLE_RANK = 5
EXAMPLE_SHAPE = (6, 4, 2, 2, 1)
EXAMPLE_TABLEAU = Tableau.from_rows([
    [1, 1, 3, 3, 4, 6],
    [2, 3, 4, 5],
    [3, 5],
    [5, 6],
    [6],
])
EXAMPLE_MIDDLE_READING = (6, 4, 3, 3, 1, 1, 5, 4, 3, 2, 5, 3, 6, 5, 6)
EXAMPLE_FAR_READING = (6, 4, 3, 5, 3, 4, 1, 3, 5, 6, 1, 2, 3, 5, 6)
EXAMPLE_EXCESS = ((5, 3, 2, 2, 0, 0), (3, 2, 1, 0), (2, 0), (2, 1), (1,))
EXAMPLE_DESCENT = 2
EXAMPLE_EPSILON = 3
EXAMPLE_RAISED = Tableau.from_rows([
    [1, 1, 2, 2, 4, 6],
    [2, 2, 4, 5],
    [3, 5],
    [5, 6],
    [6],
])
EXAMPLE_MU_MIN = (2, 2, 1)
EXAMPLE_MUBAR_TOP = ((5, 3, 0, 0), (3, 2, 0))

# A marginally large tableau in rank 3, given by its finite rows.
ML_RANK = 3
ML_ROWS = ([1, 1, 1, 1, 2, 3, 4], [2, 2, 2], [3, 4])
ML_TABLEAU = MLTableau.from_rows(ML_ROWS, ML_RANK)

# A tableau of shape (5,3,1) in rank 3 and its marginally large image.
EMBED_RANK = 3
EMBED_SHAPE = (5, 3, 1)
EMBED_TABLEAU = Tableau.from_rows([[1, 1, 2, 2, 3], [2, 3, 3], [4]])
EMBED_IMAGE_ROWS = ([1, 1, 1, 1, 1, 1, 2, 2, 3], [2, 2, 2, 3, 3], [3, 4])
