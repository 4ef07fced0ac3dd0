//! Execution-mode switch: data-parallel map with a sequential fallback.
//!
//! Trial loops (fiber sampling, row-ideal spot checks, bound sweeps) are
//! embarrassingly parallel: every item derives its own RNG from the seed and
//! its index, so results are identical in either mode. With the `parallel`
//! feature disabled, `Parallel` silently degrades to the sequential path.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

impl Default for ExecMode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }
}

/// Map `f` over `0..n`, preserving index order in the output.
pub fn map_indexed<T, F>(mode: ExecMode, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match mode {
        ExecMode::Sequential => (0..n).map(f).collect(),
        ExecMode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                (0..n).into_par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                (0..n).map(f).collect()
            }
        }
    }
}

/// Deterministic per-item RNG: the stream depends only on (seed, tag, index),
/// never on thread scheduling.
pub fn rng_for(seed: u64, tag: u32, index: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    let mut key = [0u8; 32];
    key[0..8].copy_from_slice(&seed.to_le_bytes());
    key[8..12].copy_from_slice(&tag.to_le_bytes());
    key[12..20].copy_from_slice(&index.to_le_bytes());
    key[20..28].copy_from_slice(b"rmdegrng");
    rand_chacha::ChaCha8Rng::from_seed(key)
}

/// Stage tags for [`rng_for`]; distinct stages must never share a stream.
pub mod tags {
    pub const FIBER_TRIAL: u32 = 1;
    pub const ROW_IDEAL: u32 = 2;
    pub const HEIGHT_SEQUENCE: u32 = 3;
    pub const POINT_SEARCH: u32 = 4;
    pub const SWEEP: u32 = 5;
}
