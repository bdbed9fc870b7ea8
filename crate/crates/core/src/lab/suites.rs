//! One verification suite per theorem.
//!
//! Each suite sweeps an instance space (exhaustive families, enumerated
//! function tables, seeded random linkages), checks the theorem's statement
//! on every instance, and returns a [`VerificationReport`]. The heavy sweeps
//! run on per-system index tables precomputed through the public operations
//! (meets, continuations, intervals), and a strided subset of every sweep is
//! re-checked end-to-end through the public API, so the fast path can never
//! drift from the contractual one.
//!
//! All randomness is derived from the caller's seed via
//! [`derive_seed`](crate::lab::derive_seed)`(seed, system_index, trial)`,
//! where `system_index` is the position in canonical enumeration order. The
//! same (system, trial) pair therefore reuses the same linkage across the
//! extraction, dominance, and semilattice suites, which is what their
//! statements quantify over.

use std::collections::BTreeMap;

use crate::duality::{
    build_canonical_linkage, dominates_canonical, extend_to_maximal, extract_on_family,
    extract_set_function, represents, LinkageFunction, SetFunction,
};
use crate::error::{Error, Result};
use crate::io::{FunctionFile, LinkageFile, SystemFile};
use crate::lab::counterexample::counterexample_linkage;
use crate::lab::enumerate::{
    enumerate_families, integer_codomain, EnumerationSpec, FamilyClass, FunctionIndexing,
    FUNCTION_ENUMERATION_CAP,
};
use crate::lab::random::{derive_seed, random_monotone_linkage};
use crate::lab::report::{ReportBuilder, ReportFailure, ReportSpec, VerificationReport};
use crate::rational::Rational;
use crate::system::{GroundSet, SetFamily, TruncatedAntimatroid};

/// Knobs for the randomized and enumerated sweeps.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Random monotone tables per antimatroid.
    pub samples: u64,
    /// Enumerated functions take values in `{0, …, codomain_max}`.
    pub codomain_max: i64,
    /// Raw integer range for random tables before the monotone closure.
    pub raw_lo: i64,
    pub raw_hi: i64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            samples: 1000,
            codomain_max: 2,
            raw_lo: 0,
            raw_hi: 8,
        }
    }
}

/// Every 997th instance of a dense sweep is replayed through the public API.
const API_CROSSCHECK_STRIDE: u64 = 997;

fn suite_guard(n: usize) -> Result<()> {
    if !(1..=4).contains(&n) {
        return Err(Error::GuardrailExceeded(format!(
            "verification suites cover 1 ≤ n ≤ 4, got n = {n}"
        )));
    }
    Ok(())
}

fn antimatroids(n: usize) -> Result<Vec<SetFamily>> {
    enumerate_families(&EnumerationSpec::new(n, FamilyClass::Antimatroid))
}

fn report_spec(n: usize, class: FamilyClass, opts: Option<&VerifyOptions>) -> ReportSpec {
    let mut spec = ReportSpec::from_enumeration(&EnumerationSpec::new(n, class));
    if let Some(o) = opts {
        spec.samples = Some(o.samples);
        spec.codomain_max = Some(o.codomain_max);
    }
    spec
}

fn system_failure(case: String, family: &SetFamily) -> ReportFailure {
    ReportFailure {
        system: Some(SystemFile::from_family(family)),
        ..ReportFailure::new(case)
    }
}

// ---------------------------------------------------------------------------
// Dense per-system tables
// ---------------------------------------------------------------------------

/// Index tables for one truncated antimatroid, built once and reused across
/// every function/linkage tested on that system. `dom` lists the `𝓕_{k−1}`
/// masks, `top` the size-k masks; pair tables hold (i, j, meet-index)
/// triples; `intervals[i][g]` lists the dom indices of `[dom[i], E−x]` for
/// the g-th continuation `x` of `dom[i]`.
struct SystemTables {
    n: usize,
    full_mask: u32,
    dom: Vec<u32>,
    top: Vec<u32>,
    dom_pairs: Vec<(u32, u32, u32)>,
    all_pairs: Vec<(u32, u32, u32)>,
    gamma: Vec<Vec<usize>>,
    intervals: Vec<Vec<Vec<u32>>>,
}

impl SystemTables {
    fn build(ta: &TruncatedAntimatroid) -> Self {
        let family = ta.family();
        let n = family.n();
        let k = ta.k();
        let dom: Vec<u32> = ta.interior_masks().collect();
        let top: Vec<u32> = family
            .member_masks()
            .iter()
            .copied()
            .filter(|m| m.count_ones() as usize == k)
            .collect();
        let mut dom_index = BTreeMap::new();
        for (i, &m) in dom.iter().enumerate() {
            dom_index.insert(m, i as u32);
        }
        let meet_index = |x: u32, y: u32| -> u32 {
            let z = ta.meet_mask(x, y);
            dom_index[&z]
        };
        let mut dom_pairs = Vec::new();
        for i in 0..dom.len() {
            for j in 0..i {
                dom_pairs.push((i as u32, j as u32, meet_index(dom[i], dom[j])));
            }
        }
        // Combined order dom ++ top is the family's canonical member order.
        let all: Vec<u32> = dom.iter().chain(top.iter()).copied().collect();
        debug_assert_eq!(all, family.member_masks());
        let mut all_pairs = Vec::new();
        for i in 0..all.len() {
            for j in 0..i {
                all_pairs.push((i as u32, j as u32, meet_index(all[i], all[j])));
            }
        }
        let gamma: Vec<Vec<usize>> = dom
            .iter()
            .map(|&m| {
                let g = family.continuations_mask(m);
                (0..n).filter(|x| g & (1 << x) != 0).collect()
            })
            .collect();
        let intervals: Vec<Vec<Vec<u32>>> = dom
            .iter()
            .enumerate()
            .map(|(i, &m)| {
                gamma[i]
                    .iter()
                    .map(|&x| {
                        let bit = 1u32 << x;
                        dom.iter()
                            .enumerate()
                            .filter(|&(_, &a)| m & !a == 0 && a & bit == 0)
                            .map(|(j, _)| j as u32)
                            .collect()
                    })
                    .collect()
            })
            .collect();
        SystemTables {
            n,
            full_mask: family.ground().full_mask(),
            dom,
            top,
            dom_pairs,
            all_pairs,
            gamma,
            intervals,
        }
    }

    /// Quasi-concavity of `vals` over the pair table.
    fn quasi_concave<T: Copy + Ord>(pairs: &[(u32, u32, u32)], vals: &[T]) -> bool {
        pairs
            .iter()
            .all(|&(i, j, z)| vals[z as usize] >= vals[i as usize].min(vals[j as usize]))
    }

    /// `F(X) = min_{x ∈ Γ(X)} π(x, X)` from a dense `mask * n + x` table.
    fn extract<T: Copy + Ord>(&self, pi: &[T]) -> Vec<T> {
        self.dom
            .iter()
            .enumerate()
            .map(|(i, &m)| {
                self.gamma[i]
                    .iter()
                    .map(|&x| pi[m as usize * self.n + x])
                    .min()
                    .expect("continuations are non-empty")
            })
            .collect()
    }

    /// Values of the canonical linkage at the support pair (dom[i], x_g).
    fn canonical_at<T: Copy + Ord>(&self, fvals: &[T], i: usize, g: usize) -> T {
        self.intervals[i][g]
            .iter()
            .map(|&j| fvals[j as usize])
            .max()
            .expect("intervals contain their base set")
    }

    /// Whether extraction from the canonical linkage reproduces `fvals`.
    fn canonical_roundtrip<T: Copy + Ord>(&self, fvals: &[T]) -> bool {
        (0..self.dom.len()).all(|i| {
            let g = (0..self.gamma[i].len())
                .map(|g| self.canonical_at(fvals, i, g))
                .min()
                .expect("continuations are non-empty");
            g == fvals[i]
        })
    }

    /// Extension to the size-k members: minimum of π over the complement,
    /// with the minimum of `fvals` as the fallback for `X = E`.
    fn extend(&self, fvals: &[Rational], pi: &[Rational]) -> Vec<Rational> {
        let fallback = *fvals.iter().min().expect("domain is non-empty");
        let mut out = fvals.to_vec();
        for &t in &self.top {
            let v = if t == self.full_mask {
                fallback
            } else {
                (0..self.n)
                    .filter(|x| t & (1 << x) == 0)
                    .map(|x| pi[t as usize * self.n + x])
                    .min()
                    .expect("complement is non-empty")
            };
            out.push(v);
        }
        out
    }

    /// Full canonical-linkage table in the dense `mask * n + x` layout.
    fn canonical_table(&self, fvals: &[Rational]) -> Vec<Rational> {
        let n = self.n;
        let global_min = *fvals.iter().min().expect("domain is non-empty");
        let mut out = vec![global_min; n << n];
        for mask in 0u32..=(self.full_mask) {
            for x in 0..n {
                let bit = 1u32 << x;
                if mask & bit != 0 {
                    continue;
                }
                let mut best: Option<Rational> = None;
                for (j, &a) in self.dom.iter().enumerate() {
                    if mask & !a == 0 && a & bit == 0 {
                        let v = fvals[j];
                        best = Some(best.map_or(v, |b: Rational| b.max(v)));
                    }
                }
                if let Some(v) = best {
                    out[mask as usize * n + x] = v;
                }
            }
        }
        out
    }

    fn function_from(&self, ta: &TruncatedAntimatroid, fvals: &[Rational]) -> SetFunction {
        let values: BTreeMap<u32, Rational> =
            self.dom.iter().zip(fvals).map(|(&m, &v)| (m, v)).collect();
        SetFunction::from_table(ta.family(), ta.k(), values).expect("dense values are total")
    }
}

fn table_is_monotone(n: usize, full_mask: u32, vals: &[Rational]) -> bool {
    for mask in 0..=full_mask {
        for y in 0..n {
            let bit = 1u32 << y;
            if mask & bit != 0 {
                continue;
            }
            let bigger = (mask | bit) as usize * n;
            let base = mask as usize * n;
            for x in 0..n {
                if vals[base + x] < vals[bigger + x] {
                    return false;
                }
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

/// The worked micro-example on `E = {1,2}`, `𝓕 = 2^E`: extraction gives the
/// constant 1, the canonical linkage is constant 1 on all 8 pairs, represents
/// the function, is dominated by the original linkage, and differs from it.
pub fn suite_worked_example(seed: u64) -> VerificationReport {
    let spec = report_spec(2, FamilyClass::Antimatroid, None);
    let mut rb = ReportBuilder::new("worked-example", spec, seed);
    let ground = GroundSet::numeric(2).expect("small ground set");
    let family = SetFamily::from_masks(&ground, 0..=3).expect("Boolean family");
    let pi = crate::duality::example_linkage(&ground);
    let ok = (|| -> Result<bool> {
        let ta = TruncatedAntimatroid::from_antimatroid(&family)?;
        let f = extract_set_function(&pi, &ta)?;
        let one = Rational::int(1);
        let values_ok = f.domain().count() == 3 && f.domain().all(|s| f.value(&s) == Ok(one));
        let canonical = build_canonical_linkage(&f)?;
        let canonical_ok = canonical == LinkageFunction::constant(&ground, one);
        Ok(values_ok
            && canonical_ok
            && represents(&canonical, &f)?
            && dominates_canonical(&pi, &f)?
            && canonical != pi)
    })()
    .unwrap_or(false);
    rb.record(ok, || {
        let mut fail = system_failure("worked example reproduction".into(), &family);
        fail.linkage = Some(LinkageFile::from_linkage(&pi));
        fail
    });
    rb.finish()
}

/// Recognizer agreement: on every ∅-containing accessible family the
/// three antimatroid characterizations agree, and the count of antimatroids
/// found by recognizers matches the dedicated search.
pub fn suite_recognizer_agreement(n: usize, seed: u64) -> Result<VerificationReport> {
    suite_guard(n)?;
    let spec = report_spec(n, FamilyClass::AllFamilies, None);
    let mut rb = ReportBuilder::new("recognizer-agreement", spec, seed);
    let all = enumerate_families(&EnumerationSpec::new(n, FamilyClass::AllFamilies))?;
    let mut by_exchange = 0usize;
    let mut by_union_closure = 0usize;
    let mut by_interval = 0usize;
    for family in &all {
        if !family.is_accessible() {
            continue;
        }
        let a2 = family.satisfies_exchange();
        let uc = family.is_union_closed();
        let ip = family.has_interval_property();
        let verdict = family.is_antimatroid();
        by_exchange += a2 as usize;
        by_union_closure += uc as usize;
        by_interval += ip as usize;
        let ok = a2 == uc && uc == ip && verdict == Ok(a2);
        rb.record(ok, || {
            system_failure(
                format!("characterizations disagree: A2={a2} union-closed={uc} interval={ip}"),
                family,
            )
        });
    }
    let search_count = antimatroids(n)?.len();
    let counts_ok = by_exchange == by_union_closure
        && by_union_closure == by_interval
        && by_interval == search_count;
    rb.record(counts_ok, || {
        ReportFailure::new(format!(
            "count mismatch: A2={by_exchange} union-closed={by_union_closure} \
             interval={by_interval} search={search_count}"
        ))
    });
    Ok(rb.finish())
}

/// The representation theorem, both directions, over enumerated functions:
/// for every antimatroid, every truncation level, and every assignment
/// `𝓕_{k−1} → {0..codomain_max}` (seeded systematic subsample above the
/// cap), the function is quasi-concave exactly when extraction from its
/// canonical linkage reproduces it.
pub fn suite_representation_roundtrip(
    n: usize,
    seed: u64,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    suite_guard(n)?;
    let spec = report_spec(n, FamilyClass::Antimatroid, Some(opts));
    let mut rb = ReportBuilder::new("representation-roundtrip", spec, seed);
    let codomain = integer_codomain(opts.codomain_max);
    for (sys_idx, family) in antimatroids(n)?.iter().enumerate() {
        let rank = family.rank();
        for k in 1..=rank {
            let ta = TruncatedAntimatroid::new(family, k)?;
            let tables = SystemTables::build(&ta);
            let indexing = FunctionIndexing::new(
                tables.dom.len(),
                codomain.len(),
                FUNCTION_ENUMERATION_CAP,
                derive_seed(seed, sys_idx as u64, k as u64),
            );
            let mut digits = vec![0u8; tables.dom.len()];
            for t in 0..indexing.count {
                indexing.digits_into(t, &mut digits);
                let qc = SystemTables::quasi_concave(&tables.dom_pairs, &digits);
                let roundtrip = tables.canonical_roundtrip(&digits);
                let mut ok = qc == roundtrip;
                if ok && t % API_CROSSCHECK_STRIDE == 0 {
                    let fvals: Vec<Rational> =
                        digits.iter().map(|&d| codomain[d as usize]).collect();
                    let f = tables.function_from(&ta, &fvals);
                    let canonical = build_canonical_linkage(&f)?;
                    ok = f.is_quasi_concave() == qc
                        && canonical.is_monotone()
                        && represents(&canonical, &f)? == roundtrip;
                }
                rb.record(ok, || {
                    let fvals: Vec<Rational> =
                        digits.iter().map(|&d| codomain[d as usize]).collect();
                    let f = tables.function_from(&ta, &fvals);
                    let mut fail = system_failure(
                        format!(
                            "system {sys_idx} k={k} assignment {t}: quasi-concave={qc} \
                             roundtrip={roundtrip}"
                        ),
                        ta.family(),
                    );
                    fail.function = Some(FunctionFile::from_function(&f));
                    fail
                });
            }
        }
    }
    Ok(rb.finish())
}

/// Per-trial data shared by the three randomized suites.
struct RandomTrial {
    ta_index: usize,
    linkage: LinkageFunction,
    fvals: Vec<Rational>,
}

fn random_trials<'a>(
    systems: &'a [(TruncatedAntimatroid, SystemTables)],
    rank: usize,
    sys_idx: usize,
    seed: u64,
    opts: &'a VerifyOptions,
) -> impl Iterator<Item = RandomTrial> + 'a {
    let ground = systems[0].0.ground().clone();
    (0..opts.samples).map(move |t| {
        let ta_index = t as usize % rank;
        let (_, tables) = &systems[ta_index];
        let linkage = random_monotone_linkage(
            &ground,
            derive_seed(seed, sys_idx as u64, t),
            opts.raw_lo,
            opts.raw_hi,
        );
        let fvals = tables.extract(linkage.raw_values());
        RandomTrial {
            ta_index,
            linkage,
            fvals,
        }
    })
}

fn truncation_ladder(family: &SetFamily) -> Result<Vec<(TruncatedAntimatroid, SystemTables)>> {
    (1..=family.rank())
        .map(|k| {
            let ta = TruncatedAntimatroid::new(family, k)?;
            let tables = SystemTables::build(&ta);
            Ok((ta, tables))
        })
        .collect()
}

/// Extraction preserves quasi-concavity: seeded random monotone tables on
/// every antimatroid (trial `t` runs at truncation level `1 + t mod rank`),
/// checking the extracted function and its extension to the maximal sets.
pub fn suite_random_extraction(
    n: usize,
    seed: u64,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    suite_guard(n)?;
    let spec = report_spec(n, FamilyClass::Antimatroid, Some(opts));
    let mut rb = ReportBuilder::new("extraction-quasi-concavity", spec, seed);
    for (sys_idx, family) in antimatroids(n)?.iter().enumerate() {
        let rank = family.rank();
        if rank == 0 {
            continue;
        }
        let systems = truncation_ladder(family)?;
        for (t, trial) in random_trials(&systems, rank, sys_idx, seed, opts).enumerate() {
            let (ta, tables) = &systems[trial.ta_index];
            let mut ok = trial.linkage.is_monotone();
            ok = ok && SystemTables::quasi_concave(&tables.dom_pairs, &trial.fvals);
            let extended = tables.extend(&trial.fvals, trial.linkage.raw_values());
            ok = ok && SystemTables::quasi_concave(&tables.all_pairs, &extended);
            if ok && (t as u64).is_multiple_of(API_CROSSCHECK_STRIDE) {
                let f = extract_set_function(&trial.linkage, ta)?;
                ok = f.is_quasi_concave()
                    && tables
                        .dom
                        .iter()
                        .zip(&trial.fvals)
                        .all(|(&m, &v)| f.value_of_mask(m) == Some(v));
                let ext = extend_to_maximal(&f, &trial.linkage)?;
                ok = ok && ext.is_quasi_concave() && ext.is_extended();
            }
            rb.record(ok, || {
                let mut fail = system_failure(
                    format!("system {sys_idx} trial {t}: extracted function not quasi-concave"),
                    ta.family(),
                );
                fail.linkage = Some(LinkageFile::from_linkage(&trial.linkage));
                fail.function = Some(FunctionFile::from_function(
                    &tables.function_from(ta, &trial.fvals),
                ));
                fail
            });
        }
    }
    Ok(rb.finish())
}

/// Null theorem: the canonical linkage of an extracted function sits below
/// the originating linkage on every feasible pair `(x ∈ Γ(X), X ∈ 𝓕_{k−1})`.
pub fn suite_null_dominance(
    n: usize,
    seed: u64,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    suite_guard(n)?;
    let spec = report_spec(n, FamilyClass::Antimatroid, Some(opts));
    let mut rb = ReportBuilder::new("null-dominance", spec, seed);
    for (sys_idx, family) in antimatroids(n)?.iter().enumerate() {
        let rank = family.rank();
        if rank == 0 {
            continue;
        }
        let systems = truncation_ladder(family)?;
        for (t, trial) in random_trials(&systems, rank, sys_idx, seed, opts).enumerate() {
            let (ta, tables) = &systems[trial.ta_index];
            let praw = trial.linkage.raw_values();
            let mut ok = true;
            'outer: for i in 0..tables.dom.len() {
                for (g, &x) in tables.gamma[i].iter().enumerate() {
                    let canonical = tables.canonical_at(&trial.fvals, i, g);
                    if canonical > praw[tables.dom[i] as usize * tables.n + x] {
                        ok = false;
                        break 'outer;
                    }
                }
            }
            if ok && (t as u64).is_multiple_of(API_CROSSCHECK_STRIDE) {
                let f = extract_set_function(&trial.linkage, ta)?;
                ok = dominates_canonical(&trial.linkage, &f)?;
            }
            rb.record(ok, || {
                let mut fail = system_failure(
                    format!("system {sys_idx} trial {t}: canonical linkage not dominated"),
                    ta.family(),
                );
                fail.linkage = Some(LinkageFile::from_linkage(&trial.linkage));
                fail
            });
        }
    }
    Ok(rb.finish())
}

/// Semilattice theorem: the pointwise minimum of two linkages representing
/// the same function is monotone and represents it too. Representation pairs
/// are (π, π_F), the join π ∨ π_F (which agrees with π on every extraction
/// pair), and meets of already-validated pairs; the meet laws are checked
/// through the public operation on a strided subsample.
pub fn suite_semilattice(n: usize, seed: u64, opts: &VerifyOptions) -> Result<VerificationReport> {
    suite_guard(n)?;
    let spec = report_spec(n, FamilyClass::Antimatroid, Some(opts));
    let mut rb = ReportBuilder::new("semilattice-meet", spec, seed);
    for (sys_idx, family) in antimatroids(n)?.iter().enumerate() {
        let rank = family.rank();
        if rank == 0 {
            continue;
        }
        let systems = truncation_ladder(family)?;
        for (t, trial) in random_trials(&systems, rank, sys_idx, seed, opts).enumerate() {
            let (ta, tables) = &systems[trial.ta_index];
            let praw = trial.linkage.raw_values();
            let canonical = tables.canonical_table(&trial.fvals);
            let pairs = praw.len();
            let meet: Vec<Rational> = (0..pairs).map(|i| praw[i].min(canonical[i])).collect();
            let join: Vec<Rational> = (0..pairs).map(|i| praw[i].max(canonical[i])).collect();
            let meet2: Vec<Rational> = (0..pairs).map(|i| meet[i].min(join[i])).collect();
            let full = tables.full_mask;
            let mut ok = table_is_monotone(tables.n, full, &canonical)
                && table_is_monotone(tables.n, full, &meet)
                && table_is_monotone(tables.n, full, &join);
            for candidate in [&canonical, &meet, &join, &meet2] {
                ok = ok && tables.extract(candidate) == trial.fvals;
            }
            if ok && (t as u64).is_multiple_of(API_CROSSCHECK_STRIDE) {
                ok = api_semilattice_check(ta, &trial)?;
            }
            rb.record(ok, || {
                let mut fail = system_failure(
                    format!("system {sys_idx} trial {t}: meet fails to represent"),
                    ta.family(),
                );
                fail.linkage = Some(LinkageFile::from_linkage(&trial.linkage));
                fail
            });
        }
    }
    Ok(rb.finish())
}

fn api_semilattice_check(ta: &TruncatedAntimatroid, trial: &RandomTrial) -> Result<bool> {
    let pi = &trial.linkage;
    let f = extract_set_function(pi, ta)?;
    let canonical = build_canonical_linkage(&f)?;
    let meet = pi.meet(&canonical)?;
    let join = pi.join(&canonical)?;
    let ok = meet.is_monotone()
        && represents(&meet, &f)?
        && represents(&join, &f)?
        && represents(&meet.meet(&join)?, &f)?
        // idempotent, commutative, associative
        && pi.meet(pi)? == *pi
        && pi.meet(&canonical)? == canonical.meet(pi)?
        && meet.meet(&join)? == pi.meet(&canonical.meet(&join)?)?;
    Ok(ok)
}

/// Necessity: every accessible system of rank `k` with non-empty
/// continuations on `𝓕_{k−1}` either is a k-truncated antimatroid (then the
/// construction reports no violation) or admits the three-valued monotone
/// linkage whose extracted function breaks quasi-concavity with the
/// `F(A) = 1 < 2 = F(B) = F(A∪a)` pattern.
pub fn suite_necessity(n: usize, seed: u64) -> Result<VerificationReport> {
    suite_guard(n)?;
    let spec = report_spec(n, FamilyClass::Accessible, None);
    let mut rb = ReportBuilder::new("necessity-counterexample", spec, seed);
    let families = enumerate_families(&EnumerationSpec::new(n, FamilyClass::Accessible))?;
    for family in &families {
        let k = family.rank();
        if k == 0 {
            continue;
        }
        let gamma_ok = family
            .member_masks()
            .iter()
            .filter(|m| (m.count_ones() as usize) < k)
            .all(|&m| family.continuations_mask(m) != 0);
        if !gamma_ok {
            continue;
        }
        match counterexample_linkage(family, k) {
            Err(Error::NoViolation) => {
                // Recognizer agreement: no violation means a valid truncation.
                let ok = TruncatedAntimatroid::new(family, k).is_ok();
                rb.record(ok, || {
                    system_failure(
                        "no violation but truncation validation failed".into(),
                        family,
                    )
                });
            }
            Err(e) => return Err(e),
            Ok(ce) => {
                let ok = (|| -> Result<bool> {
                    if !ce.linkage.is_monotone() {
                        return Ok(false);
                    }
                    let f = extract_on_family(&ce.linkage, family, k)?;
                    let one = Rational::int(1);
                    let two = Rational::int(2);
                    let extended = ce.lower.with_index(ce.element);
                    Ok(f.value(&ce.lower)? == one
                        && f.value(&ce.upper)? == two
                        && f.value(&extended)? == two
                        && !f.is_quasi_concave()
                        && TruncatedAntimatroid::new(family, k).is_err())
                })()
                .unwrap_or(false);
                rb.record(ok, || {
                    let mut fail = system_failure(
                        format!(
                            "counterexample pattern failed at A={}, B={}, a={}",
                            ce.lower,
                            ce.upper,
                            ce.element_label()
                        ),
                        family,
                    );
                    fail.linkage = Some(LinkageFile::from_linkage(&ce.linkage));
                    fail
                });
            }
        }
    }
    Ok(rb.finish())
}

/// Structural invariants on every antimatroid: the basis-complement fact
/// `Γ(𝓑(X)) ⊆ E−X` on all subsets, the continuation restatement of the
/// interval property, meet laws, truncation recognizers, basis facts, and
/// the proof replay `X = ∧_{x ∈ Γ(X)} A^x` — over every argmax tie-break for
/// `n ≤ 3`, and for the canonical tie-break on sampled extracted functions
/// at `n = 4`.
pub fn suite_structural(n: usize, seed: u64, opts: &VerifyOptions) -> Result<VerificationReport> {
    suite_guard(n)?;
    let spec = report_spec(n, FamilyClass::Antimatroid, Some(opts));
    let mut rb = ReportBuilder::new("structural-invariants", spec, seed);
    for (sys_idx, family) in antimatroids(n)?.iter().enumerate() {
        let mut broken: Option<String> = None;
        let mut check = |label: &str, ok: bool| {
            if ok || broken.is_some() {
                return;
            }
            broken = Some(label.to_string());
        };

        check("basis-complement", basis_complement_holds(family));
        check(
            "gamma-interval-restatement",
            gamma_restatement_holds(family),
        );
        check("meet-laws", meet_laws_hold(family));
        check("truncation-recognizers", truncations_recognized(family)?);
        check("basis-facts", basis_facts_hold(family));
        check(
            "proof-replay",
            proof_replay_holds(family, sys_idx, seed, opts)?,
        );

        match broken {
            None => rb.pass(),
            Some(label) => rb.fail(system_failure(
                format!("system {sys_idx}: {label} failed"),
                family,
            )),
        }
    }
    Ok(rb.finish())
}

/// `Γ(𝓑(X)) ⊆ E − X` for every subset `X`.
fn basis_complement_holds(family: &SetFamily) -> bool {
    let ground = family.ground();
    ground.all_subsets().all(|x| {
        let basis = family.basis(&x).expect("antimatroids have bases");
        let gamma = family.continuations(&basis).expect("basis is feasible");
        gamma.intersection(&x).is_empty()
    })
}

/// For members `X ⊆ Y`: `Γ(X) ∩ (E−Y) ⊆ Γ(Y)`.
fn gamma_restatement_holds(family: &SetFamily) -> bool {
    let members: Vec<_> = family.members().collect();
    members.iter().all(|x| {
        members.iter().filter(|y| x.is_subset_of(y)).all(|y| {
            let gx = family.continuations(x).expect("member");
            let gy = family.continuations(y).expect("member");
            gx.intersection(&y.complement()).is_subset_of(&gy)
        })
    })
}

fn meet_laws_hold(family: &SetFamily) -> bool {
    fn meet(
        family: &SetFamily,
        a: &crate::system::Subset,
        b: &crate::system::Subset,
    ) -> crate::system::Subset {
        family.meet(a, b).expect("union-closed accessible")
    }
    let members: Vec<_> = family.members().collect();
    for x in &members {
        if &meet(family, x, x) != x {
            return false;
        }
        for y in &members {
            let m = meet(family, x, y);
            if m != meet(family, y, x)
                || !m.is_subset_of(&x.intersection(y))
                || !family.contains(&m)
            {
                return false;
            }
            for z in &members {
                let yz = meet(family, y, z);
                if meet(family, &m, z) != meet(family, x, &yz) {
                    return false;
                }
            }
        }
    }
    true
}

fn truncations_recognized(family: &SetFamily) -> Result<bool> {
    for k in 1..=family.rank() {
        let trunc = family.truncate(k)?;
        if !trunc.is_accessible() || !trunc.has_truncated_interval_property(k)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn basis_facts_hold(family: &SetFamily) -> bool {
    family.ground().all_subsets().all(|x| {
        let basis = family.basis(&x).expect("antimatroids have bases");
        basis.is_subset_of(&x) && ((basis == x) == family.contains(&x))
    })
}

/// Replays the representation proof: for every valued set `X`, the meet of
/// any choice of interval argmaxes `A^x` over `x ∈ Γ(X)` is `X` itself.
fn proof_replay_holds(
    family: &SetFamily,
    sys_idx: usize,
    seed: u64,
    opts: &VerifyOptions,
) -> Result<bool> {
    let n = family.n();
    let rank = family.rank();
    if rank == 0 {
        return Ok(true);
    }
    if n <= 3 {
        // Exhaustive: every enumerated function, every argmax selection.
        let codomain = integer_codomain(opts.codomain_max);
        for k in 1..=rank {
            let ta = TruncatedAntimatroid::new(family, k)?;
            let tables = SystemTables::build(&ta);
            let indexing = FunctionIndexing::new(
                tables.dom.len(),
                codomain.len(),
                FUNCTION_ENUMERATION_CAP,
                derive_seed(seed, sys_idx as u64, k as u64),
            );
            debug_assert!(!indexing.sampled, "n ≤ 3 spaces fit under the cap");
            let mut digits = vec![0u8; tables.dom.len()];
            for t in 0..indexing.count {
                indexing.digits_into(t, &mut digits);
                if !replay_all_selections(&ta, &tables, &digits) {
                    return Ok(false);
                }
            }
        }
    } else {
        // Sampled extracted functions, canonical tie-break only.
        let systems = truncation_ladder(family)?;
        let mut sample_opts = opts.clone();
        sample_opts.samples = opts.samples.min(24);
        for trial in random_trials(&systems, rank, sys_idx, seed, &sample_opts) {
            let (ta, tables) = &systems[trial.ta_index];
            if !replay_canonical(ta, tables, &trial.fvals) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn argmax_indices<T: Copy + Ord>(
    tables: &SystemTables,
    fvals: &[T],
    i: usize,
    g: usize,
) -> Vec<u32> {
    let interval = &tables.intervals[i][g];
    let best = interval
        .iter()
        .map(|&j| fvals[j as usize])
        .max()
        .expect("interval non-empty");
    interval
        .iter()
        .copied()
        .filter(|&j| fvals[j as usize] == best)
        .collect()
}

fn replay_all_selections<T: Copy + Ord>(
    ta: &TruncatedAntimatroid,
    tables: &SystemTables,
    fvals: &[T],
) -> bool {
    for i in 0..tables.dom.len() {
        let choices: Vec<Vec<u32>> = (0..tables.gamma[i].len())
            .map(|g| argmax_indices(tables, fvals, i, g))
            .collect();
        let mut selection = vec![0usize; choices.len()];
        loop {
            let mut fold: Option<u32> = None;
            for (g, pick) in selection.iter().enumerate() {
                let a = tables.dom[choices[g][*pick] as usize];
                fold = Some(match fold {
                    None => a,
                    Some(prev) => ta.meet_mask(prev, a),
                });
            }
            if fold != Some(tables.dom[i]) {
                return false;
            }
            // odometer over the selection tuple
            let mut pos = 0;
            loop {
                if pos == selection.len() {
                    break;
                }
                selection[pos] += 1;
                if selection[pos] < choices[pos].len() {
                    break;
                }
                selection[pos] = 0;
                pos += 1;
            }
            if pos == selection.len() {
                break;
            }
        }
    }
    true
}

fn replay_canonical(ta: &TruncatedAntimatroid, tables: &SystemTables, fvals: &[Rational]) -> bool {
    for i in 0..tables.dom.len() {
        let mut fold: Option<u32> = None;
        for g in 0..tables.gamma[i].len() {
            // first maximum in canonical order = smallest (size, mask) tie-break
            let a = tables.dom[argmax_indices(tables, fvals, i, g)[0] as usize];
            fold = Some(match fold {
                None => a,
                Some(prev) => ta.meet_mask(prev, a),
            });
        }
        if fold != Some(tables.dom[i]) {
            return false;
        }
    }
    true
}

/// Runs the suites selected by `spec.class` — antimatroid-based suites for
/// [`FamilyClass::Antimatroid`], accessible-space suites for
/// [`FamilyClass::Accessible`] and [`FamilyClass::AccessibleNonAntimatroid`],
/// everything for [`FamilyClass::AllFamilies`] — and returns one report per
/// theorem, in acceptance order.
pub fn verify_all(
    spec: &EnumerationSpec,
    seed: u64,
    opts: &VerifyOptions,
) -> Result<Vec<VerificationReport>> {
    suite_guard(spec.n)?;
    spec.check_guardrails()?;
    let antimatroid_suites = matches!(
        spec.class,
        FamilyClass::Antimatroid | FamilyClass::AllFamilies
    );
    let accessible_suites = matches!(
        spec.class,
        FamilyClass::Accessible | FamilyClass::AccessibleNonAntimatroid | FamilyClass::AllFamilies
    );
    let mut reports = Vec::new();
    if antimatroid_suites {
        reports.push(suite_worked_example(seed));
        reports.push(suite_representation_roundtrip(spec.n, seed, opts)?);
        reports.push(suite_random_extraction(spec.n, seed, opts)?);
        reports.push(suite_null_dominance(spec.n, seed, opts)?);
        reports.push(suite_semilattice(spec.n, seed, opts)?);
    }
    if accessible_suites {
        reports.push(suite_necessity(spec.n, seed)?);
        reports.push(suite_recognizer_agreement(spec.n, seed)?);
    }
    if antimatroid_suites {
        reports.push(suite_structural(spec.n, seed, opts)?);
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick_opts() -> VerifyOptions {
        VerifyOptions {
            samples: 40,
            ..VerifyOptions::default()
        }
    }

    #[test]
    fn worked_example_suite_passes() {
        let report = suite_worked_example(7);
        assert!(report.passed(), "{}", report.to_json());
        assert_eq!(report.instances, 1);
    }

    #[test]
    fn all_suites_pass_on_two_elements() {
        let spec = EnumerationSpec::new(2, FamilyClass::AllFamilies);
        let reports = verify_all(&spec, 1, &quick_opts()).unwrap();
        assert_eq!(reports.len(), 8);
        for report in &reports {
            assert!(report.passed(), "{}", report.to_json());
        }
    }

    #[test]
    fn single_element_systems_pass_trivially() {
        let spec = EnumerationSpec::new(1, FamilyClass::AllFamilies);
        let reports = verify_all(&spec, 3, &quick_opts()).unwrap();
        for report in &reports {
            assert!(report.passed(), "{}", report.to_json());
        }
    }

    #[test]
    fn class_selects_suites() {
        let spec = EnumerationSpec::new(2, FamilyClass::Accessible);
        let reports = verify_all(&spec, 1, &quick_opts()).unwrap();
        let names: Vec<&str> = reports.iter().map(|r| r.theorem.as_str()).collect();
        assert_eq!(
            names,
            vec!["necessity-counterexample", "recognizer-agreement"]
        );
    }

    #[test]
    fn verify_guardrails() {
        let spec = EnumerationSpec::new(9, FamilyClass::Antimatroid);
        assert!(matches!(
            verify_all(&spec, 1, &quick_opts()),
            Err(Error::GuardrailExceeded(_))
        ));
    }

    #[test]
    fn reports_are_deterministic_for_a_fixed_seed() {
        let spec = EnumerationSpec::new(2, FamilyClass::AllFamilies);
        let a = verify_all(&spec, 5, &quick_opts()).unwrap();
        let b = verify_all(&spec, 5, &quick_opts()).unwrap();
        let canonical = |reports: &[VerificationReport]| -> Vec<String> {
            reports.iter().map(|r| r.canonical_json()).collect()
        };
        assert_eq!(canonical(&a), canonical(&b));
    }

    #[test]
    fn three_element_suites_pass() {
        let spec = EnumerationSpec::new(3, FamilyClass::AllFamilies);
        let mut opts = quick_opts();
        opts.samples = 25;
        let reports = verify_all(&spec, 11, &opts).unwrap();
        for report in &reports {
            assert!(report.passed(), "{}", report.to_json());
        }
    }
}
