use std::ops::Range;

use crate::eigensolve::Spectrum;
use crate::scalar::Scalar;

/// Contiguous grouping of a sorted spectrum into near-coincident runs.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenClustering<T> {
    /// Index ranges into the spectrum, in order, covering `0..n`.
    pub clusters: Vec<Range<usize>>,
    /// Mean of each cluster's members.
    pub representatives: Vec<T>,
    pub tol: T,
}

impl<T: Scalar> EigenClustering<T> {
    pub fn len(&self) -> usize {
        self.clusters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }

    /// Clusters with more than one member, paired with their representatives.
    pub fn degenerate(&self) -> impl Iterator<Item = (&Range<usize>, T)> + '_ {
        self.clusters
            .iter()
            .zip(self.representatives.iter().copied())
            .filter(|(r, _)| r.len() > 1)
    }

    pub fn has_degeneracy(&self) -> bool {
        self.degenerate().next().is_some()
    }

    /// Empty clustering, used when no metadata should be reported.
    pub fn none(tol: T) -> Self {
        Self { clusters: Vec::new(), representatives: Vec::new(), tol }
    }
}

/// Greedy single-linkage clustering: neighbours whose gap is at most `tol`
/// share a cluster.
pub fn cluster_spectrum<T: Scalar>(spec: &Spectrum<T>, tol: T) -> EigenClustering<T> {
    let values = spec.values();
    let mut clusters = Vec::new();
    let mut start = 0;
    for k in 1..=values.len() {
        if k == values.len() || values[k] - values[k - 1] > tol {
            if k > start {
                clusters.push(start..k);
            }
            start = k;
        }
    }
    let representatives = clusters
        .iter()
        .map(|r| {
            let members = &values[r.clone()];
            if members.len() == 1 {
                members[0]
            } else {
                members.iter().copied().sum::<T>() / T::from_usize(members.len()).expect("small count")
            }
        })
        .collect();
    EigenClustering { clusters, representatives, tol }
}
