use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::ops::Range;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::patch::{base_vertices, lattice_box};
use super::{coordinate_matrices, tile_halfspaces, Containment, HalfspaceSystem, Rational, TileMembership};
use crate::{Error, IntVector, Result};

/// Default sample denominator; an odd prime.
pub const DEFAULT_DENOMINATOR: i64 = 101;
/// Largest `n` accepted by the tiling checks.
pub const MAX_TILING_N: usize = 4;
/// Cap on candidate tiles for one box.
pub const MAX_CANDIDATE_TILES: usize = 200_000;
/// Cap on integer points enumerated by [`verify_vertex_set`].
pub const MAX_BOX_POINTS: usize = 2_000_000;
/// Attempts per sample before a facet-tight point is accepted as a boundary
/// sample.
pub const MAX_RESAMPLES: u32 = 64;
const MAX_WITNESSES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TilingConfig {
    pub n: usize,
    /// The box is `[lo, hi]^n`.
    pub lo: i64,
    pub hi: i64,
    pub samples: usize,
    pub seed: u64,
    pub denominator: i64,
}

impl TilingConfig {
    pub fn new(n: usize, lo: i64, hi: i64, samples: usize, seed: u64) -> Self {
        TilingConfig {
            n,
            lo,
            hi,
            samples,
            seed,
            denominator: DEFAULT_DENOMINATOR,
        }
    }

    fn validate(&self) -> Result<()> {
        Error::check_size(self.n, 2, MAX_TILING_N)?;
        if self.lo >= self.hi {
            return Err(Error::InvalidArgument(alloc::format!(
                "empty box [{}, {}]",
                self.lo,
                self.hi
            )));
        }
        if self.denominator < 3 || self.denominator.is_even() {
            return Err(Error::InvalidArgument(alloc::format!(
                "sample denominator must be odd and at least 3, got {}",
                self.denominator
            )));
        }
        // keep every scaled coordinate comfortably inside i64
        let bound = self.lo.unsigned_abs().max(self.hi.unsigned_abs());
        if bound > 1 << 20 || self.denominator > 1 << 20 {
            return Err(Error::Overflow);
        }
        Ok(())
    }
}

/// A sample point `numerators / denominator`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SamplePoint {
    pub numerators: Vec<i64>,
    pub denominator: i64,
}

impl SamplePoint {
    pub fn to_rationals(&self) -> Vec<Rational> {
        self.numerators
            .iter()
            .map(|&q| Rational::new(q, self.denominator))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleOutcome {
    pub point: SamplePoint,
    /// Tiles containing the point (half-open along `a`, closed sideways).
    pub containing: Vec<IntVector>,
    /// How many of those contain it away from every facet.
    pub interior: usize,
    /// The point is tight on a facet of some tile (resampling gave up).
    pub on_boundary: bool,
    pub resamples: u32,
}

/// Per-worker counters; merged by summation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TilingCounts {
    pub samples: usize,
    /// Contained in at least one tile.
    pub covered: usize,
    /// Interior to exactly one tile.
    pub interior_single: usize,
    /// Tight on some facet after all resampling attempts.
    pub boundary: usize,
    /// Interior to two or more tiles.
    pub overlaps: usize,
    pub resamples: u64,
    /// Up to a few overlapping points with the tiles that contain them.
    pub overlap_witnesses: Vec<(SamplePoint, Vec<IntVector>)>,
    /// Up to a few uncovered points.
    pub uncovered_witnesses: Vec<SamplePoint>,
}

impl TilingCounts {
    pub fn merge(&mut self, other: TilingCounts) {
        self.samples += other.samples;
        self.covered += other.covered;
        self.interior_single += other.interior_single;
        self.boundary += other.boundary;
        self.overlaps += other.overlaps;
        self.resamples += other.resamples;
        for w in other.overlap_witnesses {
            if self.overlap_witnesses.len() < MAX_WITNESSES {
                self.overlap_witnesses.push(w);
            }
        }
        for w in other.uncovered_witnesses {
            if self.uncovered_witnesses.len() < MAX_WITNESSES {
                self.uncovered_witnesses.push(w);
            }
        }
    }

    fn record(&mut self, outcome: SampleOutcome) {
        self.samples += 1;
        self.resamples += u64::from(outcome.resamples);
        if outcome.on_boundary {
            self.boundary += 1;
        }
        if outcome.containing.is_empty() {
            if self.uncovered_witnesses.len() < MAX_WITNESSES {
                self.uncovered_witnesses.push(outcome.point.clone());
            }
        } else {
            self.covered += 1;
        }
        match outcome.interior {
            1 => self.interior_single += 1,
            k if k >= 2 => {
                self.overlaps += 1;
                if self.overlap_witnesses.len() < MAX_WITNESSES {
                    self.overlap_witnesses.push((outcome.point, outcome.containing));
                }
            }
            _ => {}
        }
    }
}

struct Candidate {
    t: IntVector,
    offset: Vec<i64>,
}

/// Samples points in a box and counts the tiles of a sufficient patch that
/// contain them.
///
/// The patch is every translate whose bounding box meets the box. The base
/// prism lies in `[1, n + 1]^n`, so a tile `C t` can only contain a box point
/// when each `(C t)_i ∈ [lo - n - 1, hi - 1]`; inverting `C` bounds the
/// coefficients, and the candidates are filtered by their bounding boxes.
pub struct TilingChecker {
    config: TilingConfig,
    system: HalfspaceSystem,
    candidates: Vec<Candidate>,
}

impl TilingChecker {
    pub fn new(config: TilingConfig) -> Result<Self> {
        config.validate()?;
        let system = tile_halfspaces(config.n)?;
        let candidates = sufficient_patch(config.n, config.lo, config.hi)?;
        Ok(TilingChecker {
            config,
            system,
            candidates,
        })
    }

    pub fn config(&self) -> &TilingConfig {
        &self.config
    }

    pub fn tile_count(&self) -> usize {
        self.candidates.len()
    }

    /// The `index`-th sample of the stream (before any resampling): depends only
    /// on the seed and the index.
    fn draw(&self, rng: &mut ChaCha8Rng) -> SamplePoint {
        let d = self.config.denominator;
        let (lo, hi) = (self.config.lo * d, self.config.hi * d);
        SamplePoint {
            numerators: (0..self.config.n).map(|_| rng.random_range(lo..=hi)).collect(),
            denominator: d,
        }
    }

    /// Classifies one point against every candidate tile.
    pub fn classify_point(&self, point: &SamplePoint) -> Result<SampleOutcome> {
        Error::check_len(self.config.n, point.numerators.len())?;
        let d = point.denominator;
        if !(1..=1 << 20).contains(&d) || point.numerators.iter().any(|q| q.unsigned_abs() > 1 << 42) {
            return Err(Error::InvalidArgument("sample point out of the supported range".into()));
        }
        let n = self.config.n as i64;
        let mut containing = Vec::new();
        let mut interior = 0;
        let mut on_boundary = false;
        let mut local = alloc::vec![0i64; self.config.n];
        for tile in &self.candidates {
            let inside_bbox = point
                .numerators
                .iter()
                .zip(&tile.offset)
                .all(|(&q, &c)| (c + 1) * d <= q && q <= (c + n + 1) * d);
            if !inside_bbox {
                continue;
            }
            for ((l, &q), &c) in local.iter_mut().zip(&point.numerators).zip(&tile.offset) {
                *l = q - c * d;
            }
            if self.system.classify_scaled(&local, d) == Containment::Boundary {
                on_boundary = true;
            }
            match self.system.membership_scaled(&local, d) {
                TileMembership::Outside => {}
                TileMembership::FacetBoundary => containing.push(tile.t.clone()),
                TileMembership::Inside => {
                    interior += 1;
                    containing.push(tile.t.clone());
                }
            }
        }
        Ok(SampleOutcome {
            point: point.clone(),
            containing,
            interior,
            on_boundary,
            resamples: 0,
        })
    }

    /// Draws sample `index`, resampling from its own stream while the point is
    /// tight on a facet of some tile.
    pub fn sample(&self, index: u64) -> Result<SampleOutcome> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.config.seed);
        rng.set_stream(index);
        let mut resamples = 0;
        loop {
            let point = self.draw(&mut rng);
            let mut outcome = self.classify_point(&point)?;
            if !outcome.on_boundary || resamples == MAX_RESAMPLES {
                outcome.resamples = resamples;
                return Ok(outcome);
            }
            resamples += 1;
        }
    }

    /// Counts for samples `range`; disjoint ranges merge to the full run.
    pub fn run_range(&self, range: Range<usize>) -> Result<TilingCounts> {
        let mut counts = TilingCounts::default();
        for index in range {
            counts.record(self.sample(index as u64)?);
        }
        Ok(counts)
    }
}

fn sufficient_patch(n: usize, lo: i64, hi: i64) -> Result<Vec<Candidate>> {
    let size = n as i64;
    let side = (
        Integer::div_floor(&(lo - hi - size), &size),
        Integer::div_ceil(&(hi - lo + size), &size),
    );
    let height = (lo - size - 1, hi - 1);
    let mut ranges = alloc::vec![side; n - 1];
    ranges.push(height);
    let total = ranges
        .iter()
        .try_fold(1usize, |acc, &(a, b)| acc.checked_mul((b - a + 1) as usize));
    match total {
        Some(t) if t <= MAX_CANDIDATE_TILES => {}
        _ => {
            return Err(Error::Budget(alloc::format!(
                "box [{lo}, {hi}]^{n} needs more than {MAX_CANDIDATE_TILES} candidate tiles"
            )))
        }
    }
    let m = coordinate_matrices(n)?;
    let mut out = Vec::new();
    for t in lattice_box(&ranges) {
        let offset = m.apply(&t)?.into_inner();
        if offset.iter().all(|&c| c < hi && c + size + 1 >= lo) {
            out.push(Candidate { t: t.into(), offset });
        }
    }
    Ok(out)
}

/// Comparison of patch vertices and residue-distinct points inside a box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSetReport {
    pub n: usize,
    pub lo: i64,
    pub hi: i64,
    pub tiles: usize,
    pub residue_distinct: usize,
    pub patch_vertices: usize,
    pub only_in_patch: Vec<IntVector>,
    pub only_residue_distinct: Vec<IntVector>,
}

impl VertexSetReport {
    pub fn equal(&self) -> bool {
        self.only_in_patch.is_empty() && self.only_residue_distinct.is_empty()
    }
}

/// Enumerates both sides on `[lo, hi]^n`: residue-distinct integer points,
/// and vertices of every tile that can reach the box.
pub fn verify_vertex_set(n: usize, lo: i64, hi: i64) -> Result<VertexSetReport> {
    TilingConfig::new(n, lo, hi, 0, 0).validate()?;
    let width = (hi - lo + 1) as usize;
    if width.checked_pow(n as u32).is_none_or(|p| p > MAX_BOX_POINTS) {
        return Err(Error::Budget(alloc::format!(
            "box [{lo}, {hi}]^{n} has more than {MAX_BOX_POINTS} points"
        )));
    }
    let residue: BTreeSet<IntVector> = lattice_box(&alloc::vec![(lo, hi); n])
        .map(IntVector::new)
        .filter(|p| p.residues_distinct(n))
        .collect();

    let tiles = sufficient_patch(n, lo, hi)?;
    let base = base_vertices(n)?;
    let mut patch = BTreeSet::new();
    for tile in &tiles {
        for u in &base {
            let v: Vec<i64> = u.iter().zip(&tile.offset).map(|(x, c)| x + c).collect();
            if v.iter().all(|&x| lo <= x && x <= hi) {
                patch.insert(IntVector::new(v));
            }
        }
    }
    let limit = |it: alloc::collections::btree_set::Difference<'_, IntVector>| {
        it.take(MAX_WITNESSES).cloned().collect::<Vec<_>>()
    };
    Ok(VertexSetReport {
        n,
        lo,
        hi,
        tiles: tiles.len(),
        residue_distinct: residue.len(),
        patch_vertices: patch.len(),
        only_in_patch: limit(patch.difference(&residue)),
        only_residue_distinct: limit(residue.difference(&patch)),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TilingReport {
    pub config: TilingConfig,
    pub tiles: usize,
    pub counts: TilingCounts,
    pub vertex_set: VertexSetReport,
}

impl TilingReport {
    pub fn new(checker: &TilingChecker, counts: TilingCounts) -> Result<Self> {
        let c = checker.config();
        Ok(TilingReport {
            vertex_set: verify_vertex_set(c.n, c.lo, c.hi)?,
            config: c.clone(),
            tiles: checker.tile_count(),
            counts,
        })
    }

    /// Fraction of samples contained in at least one tile.
    pub fn covered_fraction(&self) -> f64 {
        fraction(self.counts.covered, self.counts.samples)
    }

    /// Fraction of samples interior to exactly one tile.
    pub fn single_fraction(&self) -> f64 {
        fraction(self.counts.interior_single, self.counts.samples)
    }

    pub fn pass(&self) -> bool {
        self.counts.covered == self.counts.samples
            && self.counts.overlaps == 0
            && self.vertex_set.equal()
    }
}

fn fraction(part: usize, whole: usize) -> f64 {
    if whole == 0 {
        1.0
    } else {
        part as f64 / whole as f64
    }
}

/// Single-threaded run over all samples plus the vertex-set comparison.
pub fn check_tiling(config: TilingConfig) -> Result<TilingReport> {
    let checker = TilingChecker::new(config)?;
    let counts = checker.run_range(0..checker.config().samples)?;
    TilingReport::new(&checker, counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares_tile_the_plane() {
        let report = check_tiling(TilingConfig::new(2, 0, 4, 1000, 7)).unwrap();
        assert_eq!(report.counts.samples, 1000);
        assert_eq!(report.counts.covered, 1000);
        assert_eq!(report.counts.overlaps, 0);
        assert_eq!(report.counts.interior_single + report.counts.boundary, 1000);
        assert!(report.vertex_set.equal());
        assert!(report.pass());
    }

    #[test]
    fn split_runs_merge_to_the_full_run() {
        let checker = TilingChecker::new(TilingConfig::new(3, 0, 6, 300, 11)).unwrap();
        let whole = checker.run_range(0..300).unwrap();
        let mut parts = checker.run_range(0..120).unwrap();
        parts.merge(checker.run_range(120..300).unwrap());
        assert_eq!(whole, parts);
        assert_eq!(whole.overlaps, 0);
        assert_eq!(whole.covered, 300);
    }

    #[test]
    fn samples_are_deterministic_per_index() {
        let checker = TilingChecker::new(TilingConfig::new(3, 0, 6, 10, 5)).unwrap();
        assert_eq!(checker.sample(3).unwrap(), checker.sample(3).unwrap());
        assert_ne!(checker.sample(3).unwrap().point, checker.sample(4).unwrap().point);
    }

    #[test]
    fn boundary_point_is_detected() {
        let checker = TilingChecker::new(TilingConfig::new(2, 0, 4, 0, 0)).unwrap();
        // (1, 2) is a lattice vertex: tight on facets of several tiles
        let vertex = SamplePoint {
            numerators: alloc::vec![1, 2],
            denominator: 1,
        };
        let outcome = checker.classify_point(&vertex).unwrap();
        assert!(outcome.on_boundary);
        assert_eq!(outcome.interior, 0);
        assert!(!outcome.containing.is_empty());
    }

    #[test]
    fn shifted_sample_is_still_covered_once() {
        let checker = TilingChecker::new(TilingConfig::new(3, -3, 3, 0, 0)).unwrap();
        let p = SamplePoint {
            numerators: alloc::vec![-150, 17, 250],
            denominator: 101,
        };
        let outcome = checker.classify_point(&p).unwrap();
        assert_eq!(outcome.interior, 1);
        assert_eq!(outcome.containing.len(), 1);
    }

    #[test]
    fn vertex_sets_agree_on_small_boxes() {
        for n in 2..=3 {
            let r = verify_vertex_set(n, -6, 6).unwrap();
            assert!(r.equal(), "{r:?}");
            assert_eq!(r.residue_distinct, r.patch_vertices);
        }
    }

    #[test]
    fn config_errors() {
        assert!(TilingChecker::new(TilingConfig::new(5, 0, 4, 1, 0)).is_err());
        assert!(TilingChecker::new(TilingConfig::new(2, 4, 4, 1, 0)).is_err());
        let mut even = TilingConfig::new(2, 0, 4, 1, 0);
        even.denominator = 100;
        assert!(TilingChecker::new(even).is_err());
        assert!(matches!(
            TilingChecker::new(TilingConfig::new(4, -1000, 1000, 1, 0)),
            Err(Error::Budget(_))
        ));
    }
}
