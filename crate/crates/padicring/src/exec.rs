//! Deterministic chunked summation with an optional rayon backend.
//!
//! Both strategies add the same fixed-size chunks and then combine the partial
//! sums in chunk order, so sequential and parallel results are bit-identical.

use num_complex::Complex64;

/// Elements summed per chunk.
pub const CHUNK: u64 = 1024;

/// Execution strategy for enumeration kernels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Falls back to sequential execution when the `parallel` feature is off.
    Parallel,
}

impl Default for Exec {
    fn default() -> Exec {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

fn chunk_sum<F: Fn(u64) -> Complex64>(c: u64, n: u64, f: &F) -> Complex64 {
    let hi = ((c + 1) * CHUNK).min(n);
    (c * CHUNK..hi).fold(Complex64::new(0.0, 0.0), |acc, i| acc + f(i))
}

/// `Σ_{i < n} f(i)`.
pub fn sum_range<F>(exec: Exec, n: u64, f: F) -> Complex64
where
    F: Fn(u64) -> Complex64 + Sync + Send,
{
    let chunks = n.div_ceil(CHUNK);
    let partials: Vec<Complex64> = match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            (0..chunks).into_par_iter().map(|c| chunk_sum(c, n, &f)).collect()
        }
        _ => (0..chunks).map(|c| chunk_sum(c, n, &f)).collect(),
    };
    partials.into_iter().fold(Complex64::new(0.0, 0.0), |a, b| a + b)
}
