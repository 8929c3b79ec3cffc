//! Exact chromatic symmetric functions of indifference graphs, co-bipartite
//! graphs and (3+1)-free posets, together with checks on their Newton
//! polytopes and Lorentzian property.

pub mod csf;
pub mod dyck;
pub mod error;
pub mod graph;
pub mod listing;
pub mod lorentz;
pub mod lp;
pub mod partition;
pub mod poly;
pub mod matrix;
pub mod newton;
pub mod poset;
pub mod rook;
pub mod scan;
pub mod symfunc;

pub use error::{Error, Result};
