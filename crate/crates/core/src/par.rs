//! Index-range data parallelism with a sequential fallback.
//!
//! With the `parallel` feature, work runs on a rayon pool sized by
//! [`Jobs`]; without it, or with `Jobs::Fixed(1)`, everything runs on the
//! calling thread. Callers supply an associative, commutative merge so the
//! result does not depend on how the range is split.

/// Worker count for a parallel section.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Jobs {
    /// One worker per available core.
    #[default]
    Auto,
    Fixed(usize),
}

impl Jobs {
    pub fn is_sequential(self) -> bool {
        !cfg!(feature = "parallel") || self == Jobs::Fixed(1)
    }
}

#[cfg(feature = "parallel")]
fn install<R: Send>(jobs: Jobs, op: impl FnOnce() -> R + Send) -> R {
    match jobs {
        Jobs::Auto | Jobs::Fixed(0) => op(),
        Jobs::Fixed(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(op),
            Err(_) => op(),
        },
    }
}

/// Folds every index in `0..total` into an accumulator.
pub fn fold_range<A, I, F, M>(total: u64, jobs: Jobs, init: I, fold: F, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(A, u64) -> A + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if !jobs.is_sequential() {
        use rayon::prelude::*;
        return install(jobs, || (0..total).into_par_iter().fold(&init, &fold).reduce(&init, &merge));
    }
    let _ = (&merge, jobs);
    (0..total).fold(init(), fold)
}

/// Smallest index in `0..total` satisfying `pred`.
pub fn find_first<P>(total: u64, jobs: Jobs, pred: P) -> Option<u64>
where
    P: Fn(u64) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if !jobs.is_sequential() {
        use rayon::prelude::*;
        return install(jobs, || (0..total).into_par_iter().find_first(|&i| pred(i)));
    }
    let _ = jobs;
    (0..total).find(|&i| pred(i))
}
