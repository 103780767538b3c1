"""Type A_n crystals of tableaux and characters of KLR segment modules."""
from .binfinity import MLTableau, embed_tableau, ml_excess_partitions
from .cartan import (
    RootVector,
    Weight,
    bilinear,
    cartan_matrix,
    dominant_to_partition,
    weight_of_word,
)
from .crystal import (
    CrystalGraph,
    box_ops,
    crystal_isomorphic,
    generate_crystal,
    tableau_e,
    tableau_f,
    tensor_e,
    tensor_f,
)
from .errors import DomainError, NoDescentError, ReconstructionError
from .qshuffle import (
    LaurentPoly,
    QChar,
    concat,
    e_i,
    ei_exactness_check,
    epsilon_i,
    nilhecke_char,
    serre_check,
    shuffle,
)
from .segments import (
    Linking,
    Segment,
    SegmentShuffle,
    distinguished_word,
    hook_segments,
    hook_segments_reversed,
    induced_char,
    linking_case,
    ml_tableau_segments,
    multiplicity_certificate,
    rearranged_segments,
    rearranged_segments_plus,
    row_segments,
    row_segments_reversed,
    segment_word,
    split_min_parts,
    tableau_segments,
    verify_tableau_modules,
)
from .tableaux import (
    Tableau,
    count_ssyt,
    excess_partitions,
    far_eastern_reading,
    lowest_descent,
    middle_eastern_reading,
    tableau_from_excess,
    transpose_factorial,
    validate_ssyt,
)

__version__ = "0.1.0"
