//! Superspecial genus-2 curves in Rosenhain form and the Richelot graph on them.

mod graph;
mod oracle;
mod richelot;
mod rosenhain;
mod seed;

pub use graph::{
    enumerate_ssp2, CatalogEntry, NodeRef, Ssp2Catalog, Ssp2Edge, Ssp2Graph, Ssp2Node,
};
pub use oracle::{exhaustive_ssp2_oracle, OracleDomain, MAX_P_FP, MAX_P_FP2};
pub use richelot::{all_splittings, richelot_codomain, Codomain, QuadSplitting};
pub use rosenhain::{rosenhain_expansions, rosenhain_of, rosenhain_superspecial, RosenhainTriple};
pub use seed::{find_seed_ssp2, SeedRecord, SeedStrategy, Seeds, PRIME_FIELD_SCAN_BUDGET};
