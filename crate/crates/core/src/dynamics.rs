//! Iterating `Omega_k = F(Omega_{k-1})`, cycle detection, the builtin
//! counterexample family and randomized search over generated families.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::converter::{converter_image, demyanov_convert, Collection};
use crate::error::{Error, Result};
use crate::format::canonical_digest;
use crate::geometry::{convex_hull, Direction, Point, Polytope};

pub const DEFAULT_CAP: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleResult {
    /// Index `N` of the first state that recurs.
    pub preperiod: usize,
    /// Minimal `L >= 1` with `trajectory[N + L] == trajectory[N]`.
    pub cycle_length: usize,
    /// `Omega_0` through `Omega_{N+L}`.
    pub trajectory: Vec<Collection>,
    pub canonical_hashes: Vec<String>,
}

/// Applies the converter until a state repeats, at most `cap` times.
///
/// States are indexed by canonical digest; a digest hit is confirmed by
/// comparing the full collections before it counts as a repeat.
pub fn iterate_until_cycle(omega0: &Collection, cap: usize) -> Result<CycleResult> {
    let mut trajectory = vec![omega0.clone()];
    let mut hashes = vec![canonical_digest(omega0)];
    let mut seen: HashMap<String, Vec<usize>> = HashMap::new();

    for k in 0.. {
        let current = &trajectory[k];
        let bucket = seen.entry(hashes[k].clone()).or_default();
        if let Some(&j) = bucket.iter().find(|&&j| trajectory[j] == *current) {
            return Ok(CycleResult {
                preperiod: j,
                cycle_length: k - j,
                trajectory,
                canonical_hashes: hashes,
            });
        }
        bucket.push(k);
        if k == cap {
            return Err(Error::CapExceeded {
                cap,
                partial: Box::new(trajectory),
            });
        }
        let next = demyanov_convert(current)?;
        hashes.push(canonical_digest(&next));
        trajectory.push(next);
    }
    unreachable!()
}

/// Applies the converter `steps` times, returning `Omega_0..=Omega_steps`.
pub fn trajectory(omega0: &Collection, steps: usize) -> Result<Vec<Collection>> {
    let mut out = Vec::with_capacity(steps + 1);
    out.push(omega0.clone());
    for k in 0..steps {
        let next = demyanov_convert(&out[k])?;
        out.push(next);
    }
    Ok(out)
}

/// The four-polygon family with a cycle of length four.
pub fn builtin_counterexample() -> Collection {
    let members = [
        &[(1, 0), (1, 1), (-1, 0)][..],
        &[(-1, 0), (-1, 1), (1, 0)],
        &[(1, 2), (-1, 2), (0, 0)],
        &[(2, 0), (-2, 0)],
    ]
    .into_iter()
    .map(|pts| Polytope::from_ints(pts).expect("nonempty"));
    Collection::new(members).expect("nonempty")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimCheck {
    pub relation: &'static str,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct ClaimVerdict {
    /// `Omega_0` through `Omega_5`.
    pub collections: Vec<Collection>,
    pub checks: Vec<ClaimCheck>,
    pub cycle: Option<CycleResult>,
}

impl ClaimVerdict {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Recomputes the builtin trajectory and checks every stated relation,
/// recording pass/fail for each without stopping at the first failure.
pub fn evaluate_paper_claim() -> Result<ClaimVerdict> {
    let omega0 = builtin_counterexample();
    let collections = trajectory(&omega0, 5)?;
    let cycle = iterate_until_cycle(&omega0, 100).ok();

    let steep = Direction::new(1, 2)?;
    let witness = Point::int(-1, 2);
    let on_omega2 = converter_image(&collections[2], &steep);
    let on_omega0 = converter_image(&collections[0], &steep);

    let (n, l) = cycle
        .as_ref()
        .map_or((None, None), |c| (Some(c.preperiod), Some(c.cycle_length)));
    let checks = vec![
        ClaimCheck {
            relation: "Omega_5 = Omega_1",
            passed: collections[5] == collections[1],
        },
        ClaimCheck {
            relation: "Omega_5 != Omega_3",
            passed: collections[5] != collections[3],
        },
        ClaimCheck {
            relation: "L = 4",
            passed: l == Some(4),
        },
        ClaimCheck {
            relation: "N = 1",
            passed: n == Some(1),
        },
        ClaimCheck {
            relation: "(-1,2) is a vertex of P_Omega_2((1,2))",
            passed: on_omega2.contains_vertex(&witness),
        },
        ClaimCheck {
            relation: "(-1,2) is not a vertex of P_Omega_0((1,2))",
            passed: !on_omega0.contains_vertex(&witness),
        },
    ];
    Ok(ClaimVerdict {
        collections,
        checks,
        cycle,
    })
}

/// Like [`evaluate_paper_claim`], but fails with the first violated relation.
pub fn verify_paper_claim() -> Result<ClaimVerdict> {
    let verdict = evaluate_paper_claim()?;
    if let Some(failed) = verdict.checks.iter().find(|c| !c.passed) {
        return Err(Error::ClaimViolated(failed.relation.to_owned()));
    }
    Ok(verdict)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorParams {
    pub num_polytopes: usize,
    pub max_vertices: usize,
    pub coord_bound: u32,
}

fn retry_budget(num_polytopes: usize) -> usize {
    64 * num_polytopes + 64
}

/// Seeded random family.
///
/// Generator: ChaCha8 seeded with `seed` via `seed_from_u64`. Each candidate
/// polytope draws a vertex count uniformly from `1..=max_vertices`, then that
/// many integer points with both coordinates uniform in
/// `[-coord_bound, coord_bound]` (x before y), and takes their hull.
/// Candidates equal to an earlier member are discarded; generation stops once
/// `num_polytopes` distinct members exist or the retry budget is spent.
pub fn random_family(params: GeneratorParams, seed: u64) -> Result<Collection> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b = i64::from(params.coord_bound);
    let max_vertices = params.max_vertices.max(1);
    collect_distinct(params.num_polytopes, || {
        let k = rng.gen_range(1..=max_vertices);
        let pts: Vec<Point> = (0..k)
            .map(|_| {
                let x = rng.gen_range(-b..=b);
                let y = rng.gen_range(-b..=b);
                Point::int(x, y)
            })
            .collect();
        convex_hull(pts).expect("k >= 1")
    })
}

/// Seeded family whose members are hulls of nonempty subsets of `pool`, and
/// whose vertices together cover all of `pool`'s extreme points.
pub fn random_pool_family(pool: &[Point], num_polytopes: usize, seed: u64) -> Result<Collection> {
    if pool.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let target: BTreeSet<Point> = convex_hull(pool.iter().cloned())?
        .vertices()
        .iter()
        .cloned()
        .collect();
    for _ in 0..retry_budget(num_polytopes) {
        let family = collect_distinct(num_polytopes, || {
            let k = rng.gen_range(1..=pool.len());
            let pts: Vec<Point> = pool.choose_multiple(&mut rng, k).cloned().collect();
            convex_hull(pts).expect("k >= 1")
        });
        if let Ok(family) = family {
            if target.is_subset(&family.vertex_set()) {
                return Ok(family);
            }
        }
    }
    Err(Error::GenerationFailed {
        wanted: num_polytopes,
        got: 0,
    })
}

fn collect_distinct(wanted: usize, mut draw: impl FnMut() -> Polytope) -> Result<Collection> {
    let mut members = BTreeSet::new();
    let mut attempts = 0;
    while members.len() < wanted.max(1) {
        if attempts == retry_budget(wanted) {
            return Err(Error::GenerationFailed {
                wanted,
                got: members.len(),
            });
        }
        attempts += 1;
        members.insert(draw());
    }
    Collection::new(members)
}

/// Where search instances come from. Instance `i` uses seed `base_seed + i`.
#[derive(Clone, Debug)]
pub enum InstanceSource {
    Random(GeneratorParams),
    Pool {
        points: Vec<Point>,
        num_polytopes: usize,
    },
    /// The same family for every seed.
    Fixed(Collection),
}

impl InstanceSource {
    pub fn generate(&self, seed: u64) -> Result<Collection> {
        match self {
            InstanceSource::Random(params) => random_family(*params, seed),
            InstanceSource::Pool {
                points,
                num_polytopes,
            } => random_pool_family(points, *num_polytopes, seed),
            InstanceSource::Fixed(c) => Ok(c.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub seed: u64,
    pub cycle_length: usize,
    pub family: Collection,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub instances_run: usize,
    pub histogram: BTreeMap<usize, usize>,
    /// First instance (in seed order) attaining the largest cycle length.
    pub max_l_witness: Option<Witness>,
    pub cap_exceeded: usize,
}

/// Runs [`iterate_until_cycle`] on `num_instances` seeded families. Instances
/// run in parallel; the report is folded in seed order.
pub fn search_cycles(
    source: &InstanceSource,
    num_instances: usize,
    cap: usize,
    base_seed: u64,
) -> Result<SearchReport> {
    let outcomes: Vec<(u64, Collection, Option<usize>)> = (0..num_instances as u64)
        .into_par_iter()
        .map(|i| {
            let seed = base_seed.wrapping_add(i);
            let family = source.generate(seed)?;
            let length = match iterate_until_cycle(&family, cap) {
                Ok(r) => Some(r.cycle_length),
                Err(Error::CapExceeded { .. }) => None,
                Err(e) => return Err(e),
            };
            Ok((seed, family, length))
        })
        .collect::<Result<_>>()?;

    let mut report = SearchReport {
        instances_run: num_instances,
        histogram: BTreeMap::new(),
        max_l_witness: None,
        cap_exceeded: 0,
    };
    for (seed, family, length) in outcomes {
        let Some(l) = length else {
            report.cap_exceeded += 1;
            continue;
        };
        *report.histogram.entry(l).or_default() += 1;
        if report
            .max_l_witness
            .as_ref()
            .is_none_or(|w| l > w.cycle_length)
        {
            report.max_l_witness = Some(Witness {
                seed,
                cycle_length: l,
                family,
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(pts: &[(i64, i64)]) -> Polytope {
        Polytope::from_ints(pts).unwrap()
    }

    #[test]
    fn builtin_has_four_members_and_is_symmetric() {
        let om = builtin_counterexample();
        assert_eq!(om.len(), 4);
        assert_eq!(om.reflect_y(), om);
        let with_origin: Vec<_> = om
            .members()
            .iter()
            .filter(|p| p.contains_vertex(&Point::int(0, 0)))
            .collect();
        assert_eq!(with_origin, vec![&poly(&[(1, 2), (-1, 2), (0, 0)])]);
    }

    #[test]
    fn builtin_cycles_with_period_four() {
        let r = iterate_until_cycle(&builtin_counterexample(), 100).unwrap();
        assert_eq!((r.preperiod, r.cycle_length), (1, 4));
        assert_eq!(r.trajectory.len(), 6);
        assert_eq!(r.canonical_hashes.len(), 6);
        assert_eq!(r.trajectory[5], r.trajectory[1]);
    }

    #[test]
    fn single_point_is_fixed() {
        let om = Collection::new([poly(&[(0, 0)])]).unwrap();
        let r = iterate_until_cycle(&om, 10).unwrap();
        assert_eq!((r.preperiod, r.cycle_length), (0, 1));
    }

    #[test]
    fn segment_alternates_with_its_endpoints() {
        // {seg} -> {seg, left end, right end} -> {seg}: the two endpoint
        // members are their own argmax, so every image is the whole segment.
        let om = Collection::new([poly(&[(2, 0), (-2, 0)])]).unwrap();
        let r = iterate_until_cycle(&om, 10).unwrap();
        assert_eq!((r.preperiod, r.cycle_length), (0, 2));
        assert_eq!(r.trajectory[1].len(), 3);
        assert_eq!(r.trajectory[2], om);
    }

    #[test]
    fn cap_exceeded_carries_partial_trajectory() {
        match iterate_until_cycle(&builtin_counterexample(), 3) {
            Err(Error::CapExceeded { cap, partial }) => {
                assert_eq!(cap, 3);
                assert_eq!(partial.len(), 4);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn claim_verifies() {
        let verdict = verify_paper_claim().unwrap();
        assert!(verdict.passed());
        assert_eq!(verdict.collections.len(), 6);
    }

    #[test]
    fn random_family_edge_cases() {
        let p = GeneratorParams {
            num_polytopes: 1,
            max_vertices: 1,
            coord_bound: 0,
        };
        assert_eq!(
            random_family(p, 7).unwrap(),
            Collection::new([poly(&[(0, 0)])]).unwrap()
        );
        let p = GeneratorParams {
            num_polytopes: 2,
            max_vertices: 1,
            coord_bound: 0,
        };
        assert!(matches!(
            random_family(p, 7),
            Err(Error::GenerationFailed { wanted: 2, got: 1 })
        ));
    }

    #[test]
    fn random_family_is_deterministic() {
        let p = GeneratorParams {
            num_polytopes: 4,
            max_vertices: 4,
            coord_bound: 3,
        };
        for seed in 0..20 {
            let a = random_family(p, seed).unwrap();
            assert_eq!(a, random_family(p, seed).unwrap());
            assert_eq!(a.len(), 4);
        }
    }

    #[test]
    fn pool_family_covers_pool() {
        let pool = vec![Point::int(0, 0), Point::int(1, 0), Point::int(0, 1)];
        for seed in 0..20 {
            let f = random_pool_family(&pool, 3, seed).unwrap();
            assert_eq!(f.vertex_set(), pool.iter().cloned().collect());
        }
    }

    #[test]
    fn search_on_injected_builtin() {
        let src = InstanceSource::Fixed(builtin_counterexample());
        let report = search_cycles(&src, 1, 100, 0).unwrap();
        assert_eq!(report.histogram, BTreeMap::from([(4, 1)]));
        assert_eq!(report.max_l_witness.unwrap().cycle_length, 4);
    }

    #[test]
    fn search_counts_cap_exceeded() {
        let src = InstanceSource::Fixed(builtin_counterexample());
        let report = search_cycles(&src, 3, 2, 0).unwrap();
        assert_eq!(report.cap_exceeded, 3);
        assert!(report.histogram.is_empty());
        assert!(report.max_l_witness.is_none());
    }
}
