//! Execution strategy for the data-parallel kernels.
//!
//! Every bulk loop (lattice-box scans, integrality grids, batched character
//! evaluation) funnels through `map_indices`, so the parallel and sequential
//! paths are the same code. With the `parallel` feature (default) the
//! `Parallel` strategy fans out on rayon; without it, `Parallel` quietly
//! degrades to the sequential path. Outputs are index-ordered either way, so
//! results are byte-identical across strategies.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

pub fn map_indices<T: Send>(exec: Exec, n: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    match exec {
        Exec::Sequential => (0..n).map(f).collect(),
        Exec::Parallel => {
            #[cfg(feature = "parallel")]
            {
                (0..n).into_par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                (0..n).map(f).collect()
            }
        }
    }
}

/// Like `map_indices` but drops `None` results, preserving index order.
pub fn filter_map_indices<T: Send>(
    exec: Exec,
    n: usize,
    f: impl Fn(usize) -> Option<T> + Sync + Send,
) -> Vec<T> {
    map_indices(exec, n, f).into_iter().flatten().collect()
}
