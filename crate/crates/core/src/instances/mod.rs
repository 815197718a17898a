//! Instance generators: adversarial families, random graphs and the
//! hardness reductions, each with a sidecar certificate.

mod certificate;
mod coloring;
mod families;
mod random;
mod sat;
mod vc;

pub use certificate::{Certificate, Witness};
pub use coloring::{edge_color, is_proper_coloring};
pub use families::{
    gen_threaded_cycles, gen_two_exchange_worst, is_hamilton_cycle, threaded_cycles_ratio,
    FamilyInstance,
};
pub use random::{
    gen_random_connected_ugraph, gen_random_dag, gen_random_digraph, gen_random_strong,
    gen_random_strong_sampled,
};
pub use sat::{
    reduce_sat_to_scss5, CnfFormula, SatInstance, VariableGadget, SAT_BRUTE_FORCE_MAX_VARS,
    SAT_ROOT,
};
pub use vc::{
    min_vertex_cover, reduce_vc_to_scss17, Gadget, UGraph, VcInstance, ROOT, VC_MAX_DEGREE,
};
