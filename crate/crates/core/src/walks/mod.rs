//! The random turns walker model.
//!
//! `p` walkers start on adjacent sites `1..=p` of the integer line. At each
//! tick exactly one walker moves one site left (`L`) or right (`R`) and no
//! two walkers may share a site. A closed walk of `2n` ticks returns every
//! walker to its start, so its step word holds `n` of each letter.
//!
//! Walkers and diagram columns are numbered from zero in the API and from
//! one in the JSON wire format.

mod bijection;
mod diagram;
mod enumerate;
mod history;
mod stochastic;
mod transposition;
mod word;

pub use bijection::{
    diagram_to_tableau_pair, permutation_to_walk, tableau_pair_to_diagram, walk_to_permutation,
};
pub use diagram::{diagram_to_walk, walk_to_diagram, Column, Side, SignedDiagram};
pub use enumerate::{collect_walks, enumerate_walks, for_each_walk};
pub use history::{Move, WalkHistory};
pub use stochastic::{stochastic_step, ModelParams};
pub use transposition::{apply_reduction, apply_transposition, word_reduction};
pub use word::{Step, StepWord};
