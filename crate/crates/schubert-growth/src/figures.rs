//! Golden data for the two worked diagrams in frame `(2,5)`: the growth
//! example and its image under the wall crossing `(p,q) = (4,7)`.

use crate::cylgrowth::{CylGrowthDiagram, PathThroughI};
use crate::partitions::BoxFrame;
use crate::tableaux::ChainTableau;

pub const GROWTH_EXAMPLE_JSON: &str = include_str!("../fixtures/figure_growth.json");
pub const WALL_CROSSED_JSON: &str = include_str!("../fixtures/figure_wall_crossed.json");

/// The wall whose crossing carries the growth example to the crossed one.
pub const FIGURE_WALL: (i64, i64) = (4, 7);

/// Path `(4,4) → (3,4) → (3,5) → (3,6) → (2,6) → (2,7) → (2,8)`.
pub const FIGURE_PATH: [(i64, i64); 7] = [(4, 4), (3, 4), (3, 5), (3, 6), (2, 6), (2, 7), (2, 8)];

/// The tableau `[[1,2,5],[3,4,6]]` read along [`FIGURE_PATH`].
pub const FIGURE_CHAIN: [&[usize]; 7] = [&[], &[1], &[2], &[2, 1], &[2, 2], &[3, 2], &[3, 3]];

pub fn figure_frame() -> BoxFrame {
    BoxFrame::new(2, 5).expect("valid frame")
}

pub fn figure_path() -> PathThroughI {
    PathThroughI::new(FIGURE_PATH.to_vec()).expect("valid path")
}

pub fn figure_chain() -> ChainTableau {
    let parts: Vec<Vec<usize>> = FIGURE_CHAIN.iter().map(|p| p.to_vec()).collect();
    ChainTableau::from_parts(figure_frame(), &parts).expect("valid chain")
}

pub fn growth_example() -> CylGrowthDiagram {
    serde_json::from_str(GROWTH_EXAMPLE_JSON).expect("fixture parses")
}

pub fn wall_crossed_example() -> CylGrowthDiagram {
    serde_json::from_str(WALL_CROSSED_JSON).expect("fixture parses")
}
