//! Monte Carlo estimation of averaged characteristic-polynomial
//! coefficients, checked against the exact derivation.
//!
//! Samples are processed in fixed-size chunks.  Chunk `i` always uses the
//! RNG stream `i` of the configured seed and chunk statistics are merged in
//! index order, so a report is a pure function of (ensemble, estimand,
//! samples, seed, chunk_size) -- the worker count only changes wall time.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use skewop_core::ensemble::WeightFamily;
use skewop_core::rational::{rat, rat_int, Rat};
use skewop_core::skew::{derive_even, derive_odd};

use crate::charpoly::charpoly_coeffs;
use crate::sampler::McEnsemble;
use crate::McError;

/// What to average per sample: the characteristic polynomial itself, or the
/// characteristic polynomial weighted by the matrix trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Estimand {
    Charpoly,
    CharpolyTimesTrace,
}

impl Estimand {
    pub fn label(&self) -> &'static str {
        match self {
            Estimand::Charpoly => "charpoly",
            Estimand::CharpolyTimesTrace => "charpoly-times-trace",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct McConfig {
    pub samples: u64,
    pub seed: u64,
    /// A coefficient fails when it sits more than this many standard errors
    /// from its target.
    pub sigma_threshold: f64,
    pub workers: usize,
    /// Samples per RNG stream.  Part of the reproducibility contract:
    /// changing it changes the draws.
    pub chunk_size: u64,
    /// The quaternion spherical sampler dictionary is only cross-checked at
    /// half-size 1; require an explicit opt-in before trusting it.
    pub allow_quaternion_spherical: bool,
}

impl Default for McConfig {
    fn default() -> Self {
        McConfig {
            samples: 100_000,
            seed: 1,
            sigma_threshold: 4.0,
            workers: 1,
            chunk_size: 8192,
            allow_quaternion_spherical: false,
        }
    }
}

/// Streaming mean / second central moment per coefficient (Welford), plus
/// bookkeeping for the imaginary parts that should vanish.
#[derive(Debug, Clone, PartialEq)]
struct ChunkStats {
    count: u64,
    mean: Vec<f64>,
    m2: Vec<f64>,
    max_imag: f64,
    regenerated: u64,
}

impl ChunkStats {
    fn new(len: usize) -> ChunkStats {
        ChunkStats {
            count: 0,
            mean: vec![0.0; len],
            m2: vec![0.0; len],
            max_imag: 0.0,
            regenerated: 0,
        }
    }

    fn update(&mut self, values: &[f64]) {
        self.count += 1;
        let n = self.count as f64;
        for (i, &x) in values.iter().enumerate() {
            let delta = x - self.mean[i];
            self.mean[i] += delta / n;
            self.m2[i] += delta * (x - self.mean[i]);
        }
    }

    /// Pairwise (Chan) combination of two disjoint streams.
    fn merge(mut self, other: &ChunkStats) -> ChunkStats {
        if other.count == 0 {
            return self;
        }
        if self.count == 0 {
            return other.clone();
        }
        let na = self.count as f64;
        let nb = other.count as f64;
        let n = na + nb;
        for i in 0..self.mean.len() {
            let delta = other.mean[i] - self.mean[i];
            self.mean[i] += delta * nb / n;
            self.m2[i] += other.m2[i] + delta * delta * na * nb / n;
        }
        self.count += other.count;
        self.max_imag = self.max_imag.max(other.max_imag);
        self.regenerated += other.regenerated;
        self
    }
}

fn run_chunk(
    ensemble: &McEnsemble,
    estimand: Estimand,
    seed: u64,
    chunk_index: u64,
    count: u64,
) -> Result<ChunkStats, McError> {
    let dim = ensemble.matrix_dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk_index);
    let mut stats = ChunkStats::new(dim + 1);
    let mut values = vec![0.0; dim + 1];
    for _ in 0..count {
        let (g, regenerated) = ensemble.sample(&mut rng);
        stats.regenerated += regenerated;
        let coeffs = charpoly_coeffs(&g)?;
        match estimand {
            Estimand::Charpoly => {
                for (i, c) in coeffs.iter().enumerate() {
                    values[i] = c.re;
                    stats.max_imag = stats.max_imag.max(c.im.abs());
                }
            }
            Estimand::CharpolyTimesTrace => {
                let t = g.trace();
                for (i, c) in coeffs.iter().enumerate() {
                    let y = c * t;
                    values[i] = y.re;
                    stats.max_imag = stats.max_imag.max(y.im.abs());
                }
            }
        }
        stats.update(&values);
    }
    Ok(stats)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

/// Outcome of one Monte Carlo run.  Excludes the worker count on purpose:
/// two runs differing only in `workers` produce equal reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct McReport {
    pub ensemble: String,
    pub estimand: Estimand,
    pub samples: u64,
    pub seed: u64,
    pub chunk_size: u64,
    pub sigma_threshold: f64,
    /// Exact coefficients of the averaged polynomial, constant term first.
    pub target: Vec<f64>,
    pub estimate: Vec<f64>,
    pub std_error: Vec<f64>,
    pub z_score: Vec<f64>,
    /// Largest imaginary part seen in any averaged quantity; a sanity bound
    /// on the numerics, not a statistical figure.
    pub max_imag: f64,
    /// Redraws forced by ill-conditioned Gram matrices.
    pub regenerated: u64,
    pub verdict: Verdict,
}

/// Second-moment safety margin demanded of spherical runs.  Heavy-tailed
/// parameter choices make the estimator variance infinite well before the
/// mean diverges, so plain spherical sampling is refused unless the decay
/// exponent clears the coefficient variance requirement with room to spare.
fn spherical_margin(alpha1: &Rat, alpha2: &Rat, n: usize) -> Rat {
    alpha2 - (rat_int(2 * n as i64) + alpha1 + rat(1, 2))
}

pub fn run_mc(
    ensemble: &McEnsemble,
    estimand: Estimand,
    config: &McConfig,
) -> Result<McReport, McError> {
    ensemble.validate()?;
    if config.samples < 2 {
        return Err(McError::InvalidConfig { detail: "need at least 2 samples".into() });
    }
    if config.chunk_size == 0 {
        return Err(McError::InvalidConfig { detail: "chunk_size must be positive".into() });
    }
    if config.workers == 0 {
        return Err(McError::InvalidConfig { detail: "workers must be positive".into() });
    }
    if matches!(ensemble, McEnsemble::SphericalQuaternion { .. })
        && !config.allow_quaternion_spherical
    {
        return Err(McError::AdvisoryEnsemble);
    }

    let spec = ensemble.ensemble_spec();
    if let WeightFamily::Spherical { alpha1, alpha2 } = &spec.family {
        let margin = spherical_margin(alpha1, alpha2, spec.n);
        if margin < rat_int(2) {
            return Err(McError::MomentGuard {
                detail: format!(
                    "spherical decay margin {margin} < 2; raise the denominator \
                     exponent (alpha2 = {alpha2}) before sampling",
                ),
            });
        }
    }

    let dim = spec.matrix_dim();
    let target_poly = match estimand {
        Estimand::Charpoly => derive_even(&spec)?,
        // the trace-weighted average is the odd polynomial minus its leading
        // shift of the even one
        Estimand::CharpolyTimesTrace => &derive_odd(&spec)? - &derive_even(&spec)?.shift_mul(1),
    };
    let target = target_poly.f64_coeffs(dim + 1);

    let n_chunks = config.samples.div_ceil(config.chunk_size);
    let next = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let results: Mutex<Vec<Option<ChunkStats>>> = Mutex::new(vec![None; n_chunks as usize]);
    let failure: Mutex<Option<McError>> = Mutex::new(None);

    std::thread::scope(|scope| {
        for _ in 0..config.workers.min(n_chunks as usize) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= n_chunks || stop.load(Ordering::Relaxed) {
                    return;
                }
                let count = config.chunk_size.min(config.samples - i * config.chunk_size);
                match run_chunk(ensemble, estimand, config.seed, i, count) {
                    Ok(stats) => results.lock().unwrap()[i as usize] = Some(stats),
                    Err(e) => {
                        *failure.lock().unwrap() = Some(e);
                        stop.store(true, Ordering::Relaxed);
                        return;
                    }
                }
            });
        }
    });

    if let Some(e) = failure.into_inner().unwrap() {
        return Err(e);
    }
    let merged = results
        .into_inner()
        .unwrap()
        .into_iter()
        .fold(ChunkStats::new(dim + 1), |acc, s| {
            acc.merge(&s.expect("all chunks completed"))
        });

    let count = merged.count as f64;
    let std_error: Vec<f64> = merged
        .m2
        .iter()
        .map(|m2| (m2 / (count - 1.0) / count).sqrt())
        .collect();
    let z_score: Vec<f64> = merged
        .mean
        .iter()
        .zip(&std_error)
        .zip(&target)
        .map(|((est, se), t)| {
            let diff = est - t;
            if *se == 0.0 {
                if diff == 0.0 {
                    0.0
                } else {
                    f64::INFINITY
                }
            } else {
                diff / se
            }
        })
        .collect();
    let verdict = if z_score.iter().all(|z| z.abs() <= config.sigma_threshold) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };

    Ok(McReport {
        ensemble: ensemble.label(),
        estimand,
        samples: config.samples,
        seed: config.seed,
        chunk_size: config.chunk_size,
        sigma_threshold: config.sigma_threshold,
        target,
        estimate: merged.mean,
        std_error,
        z_score,
        max_imag: merged.max_imag,
        regenerated: merged.regenerated,
        verdict,
    })
}
