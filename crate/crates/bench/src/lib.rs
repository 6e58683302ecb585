//! Shared inputs for the criterion benchmarks.

use czcp_core::barker::{barker, theorem4_pair};
use czcp_core::gbf::theorem1_pair;
use czcp_core::insertion::{theorem2_pair, InsertionSpec, DEFAULT_MAX_N};
use czcp_core::SequencePair;

/// Named pairs of increasing length and alphabet size.
pub fn fixtures() -> Vec<(&'static str, SequencePair)> {
    let b = |n| barker(n).unwrap().remove(0);
    let spec = InsertionSpec::binary_default();
    vec![
        ("barker-24", theorem4_pair(&b(11), &b(13)).unwrap()),
        ("gbf-q6-130", theorem1_pair(8, 6, &[0, 1, 2, 3, 4, 5], 5).unwrap()),
        (
            "insertion-258",
            theorem2_pair(7, 0, 0, &spec, DEFAULT_MAX_N).unwrap().pair,
        ),
        (
            "gbf-q4-514",
            theorem1_pair(10, 4, &[0, 1, 2, 3, 4, 5, 6, 7], 3).unwrap(),
        ),
    ]
}
