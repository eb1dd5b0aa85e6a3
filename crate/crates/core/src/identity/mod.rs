//! Squared eigenvector components from eigenvalues: for coordinate `j` with
//! principal minor `M_j`,
//!
//! ```text
//! |v_{i,j}|² · Π_{k≠i} (λ_i(A) − λ_k(A)) = Π_k (λ_i(A) − λ_k(M_j))
//! ```
//!
//! All products run in signed log space. Near-coincident eigenvalues are
//! grouped and handled through the limit of the identity, which fixes only
//! the total weight of each group.

mod cluster;
mod interlace;
mod resolvent;
mod signed_log;
mod table;
mod weights;

pub use cluster::{cluster_spectrum, EigenClustering};
pub use interlace::{check_interlacing, InterlacingReport};
pub use resolvent::{
    residue_one_sided, residue_richardson, resolvent_det_form, resolvent_pf_form, ResolventSample,
};
pub use signed_log::{signed_log_product, SignedLogValue};
pub use table::{
    magnitude_column, magnitude_table, magnitude_table_run, magnitude_table_with_tol, principal_minor,
    MagnitudeTable, TableRun,
};
pub use weights::{cluster_weight, magnitude_squared};
