//! Classical limit: cluster seeds, the trace map, the Poisson bracket and
//! twists realized by mutations.

mod seed;
mod suite;
mod trace;

pub use seed::{dehn_cl, dehn_cl_steps, parse_script, z_pow, ExchangeMatrix, Seed, Step, N};
pub use suite::{
    coupled_markov, flatten_loop, loop30, loop30_reference, markov_reduction, mutation_induces_twist, poisson_suite,
    product_relation, twist_relations, verify_cluster, verify_cluster_identity, ClusterIdentity,
};
pub use trace::{
    classical_twist, classical_twist_images, classical_twist_word, euler, kvars, poisson_bracket, poisson_bracket_with,
    trace_expr, trace_of, trace_under_y_map, trace_var, TRACE_CURVES,
};

#[cfg(test)]
mod tests;
