//! Finite-lattice workbench.
//!
//! Builds finite bounded lattices, equips a designated point set `X` with
//! Zariski-like topologies (varieties `V(a) = {p in X : a <= p}`, radicals,
//! the sublattice of radical elements), decides the X-top property, analyzes
//! the resulting finite spaces (separation axioms, connectedness, sobriety,
//! spectrality), and runs a registry of named structure checks over concrete
//! instances such as submodule lattices of finite `Z_n`-modules and
//! normal-subgroup lattices of finite groups.

pub mod checks;
pub mod corpus;
pub mod dot;
pub mod gen;
pub mod groups;
pub mod io;
pub mod lattice;
pub mod modules;
pub mod report;
pub mod sample;
pub mod spectrum;
pub mod topology;

pub use lattice::{Classification, Lattice, LatticeError};
pub use spectrum::{Orientation, RadicalSublattice, SpectrumContext, SpectrumError, XTopStatus};
pub use topology::{FiniteTopology, PropertyReport, Provenance, TopologyError};

/// Default cap on lattice element count; scans are pairwise, so this keeps
/// worst cases tractable.
pub const DEFAULT_LATTICE_CAP: usize = 4096;

/// Default cap on the number of elements of a finite module.
pub const DEFAULT_MODULE_CAP: usize = 512;

/// Default cap on group order.
pub const DEFAULT_GROUP_CAP: usize = 128;

/// Runtime capacity caps, overridable through `LATSPEC_CAP`.
#[derive(Debug, Clone, Copy)]
pub struct Caps {
    pub lattice: usize,
    pub module: usize,
    pub group: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            lattice: DEFAULT_LATTICE_CAP,
            module: DEFAULT_MODULE_CAP,
            group: DEFAULT_GROUP_CAP,
        }
    }
}

impl Caps {
    /// Caps with the `LATSPEC_CAP` environment override applied. The
    /// variable is a single knob: it replaces every cap.
    pub fn from_env() -> Self {
        match std::env::var("LATSPEC_CAP") {
            Ok(v) => match v.trim().parse::<usize>() {
                Ok(n) if n > 0 => Caps {
                    lattice: n,
                    module: n,
                    group: n,
                },
                _ => Caps::default(),
            },
            Err(_) => Caps::default(),
        }
    }
}
