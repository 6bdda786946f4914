//! The twelve acceptance criteria. Each one returns a pass/fail outcome
//! with a short detail line; failures are reported, never thrown.

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use anyhow::{anyhow, bail, ensure, Context, Result};
use permuto_core::euler::{
    hstar_of, macaulay_check, numerical_dimension, omega_from, pair_polytope, pairs_sum,
    sign_law_holds, kindred_snapper, multidegree_and_progenitor,
    project_multisnapper, SnapperPoly, Transfer,
};
use permuto_core::genperm::FaceSpec;
use permuto_core::tropical::multiplicity_certificate;
use permuto_core::{
    initial_degeneration, sample_weight, Chain, InitialDegeneration, Matroid, SubmodularSpec,
    Subset, Weight,
};

use crate::args::Level;
use crate::corpus;

/// Which face of `P` a cone selects. `Flipped` takes the maximizing face
/// instead of the minimizing one and exists to show the suite notices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Convention {
    #[default]
    Minimizing,
    Flipped,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Settings {
    pub level: Level,
    pub seed: u64,
    pub convention: Convention,
}

impl Settings {
    pub fn new(level: Level, seed: u64) -> Self {
        Settings {
            level,
            seed,
            convention: Convention::Minimizing,
        }
    }

    fn full(&self) -> bool {
        self.level == Level::Full
    }

    /// Largest ground set of the main corpus.
    fn max_n(&self) -> usize {
        if self.full() {
            5
        } else {
            4
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl Outcome {
    /// `criterion.3=pass macaulay: ...`
    pub fn line(&self) -> String {
        let verdict = if self.passed { "pass" } else { "fail" };
        format!("criterion.{}={verdict} {}: {}", self.id, self.name, self.detail)
    }
}

pub const NAMES: [&str; 12] = [
    "golden-fixture",
    "dual-route",
    "macaulay",
    "omega-nonnegative",
    "macaulay-fixtures",
    "degree-law",
    "structural-invariants",
    "weight-independence",
    "sign-and-endpoint",
    "non-valuative-hstar",
    "free-ehrhart",
    "kindred-round-trip",
];

/// Runs every criterion in order.
pub fn run_all(settings: Settings) -> Vec<Outcome> {
    let ctx = Ctx::new(settings);
    (1..=12).map(|id| ctx.run(id)).collect()
}

/// Runs a single criterion with a fresh cache.
pub fn run_one(settings: Settings, id: u8) -> Outcome {
    Ctx::new(settings).run(id)
}

/// χ evaluator for one (degeneration, polytope) pair.
enum Evaluator {
    Core(Transfer),
    Flipped(Vec<(i64, FaceSpec)>),
}

impl Evaluator {
    fn new(deg: &InitialDegeneration, p: &SubmodularSpec, convention: Convention) -> Result<Self> {
        Ok(match convention {
            Convention::Minimizing => Evaluator::Core(Transfer::new(deg, p)?),
            Convention::Flipped => {
                let n = p.n();
                let full = Subset::full(n);
                let mut terms = Vec::new();
                for (chain, c) in deg.support() {
                    let opposite = chain.sets().iter().rev().map(|&s| full - s).collect();
                    terms.push((c, p.face(&Chain::new(n, opposite)?)));
                }
                Evaluator::Flipped(terms)
            }
        })
    }

    fn chi(&self, a: u64) -> Result<i128> {
        match self {
            Evaluator::Core(t) => Ok(t.chi(a)?),
            Evaluator::Flipped(terms) => {
                let mut total = 0i128;
                for (c, face) in terms {
                    total += *c as i128 * face.lattice_count(a)? as i128;
                }
                Ok(total)
            }
        }
    }

    fn values(&self, upto: usize) -> Result<Vec<i128>> {
        (0..=upto as u64).map(|a| self.chi(a)).collect()
    }
}

/// χ(a) through the degeneration under either face convention.
pub fn chi_with(
    deg: &InitialDegeneration,
    p: &SubmodularSpec,
    a: u64,
    convention: Convention,
) -> Result<i128> {
    Evaluator::new(deg, p, convention)?.chi(a)
}

/// ω under either face convention.
pub fn omega_with(deg: &InitialDegeneration, convention: Convention) -> Result<i128> {
    match convention {
        Convention::Minimizing => Ok(omega_from(deg)?),
        Convention::Flipped => {
            let m = deg.matroid();
            let p = SubmodularSpec::rank(m).neg();
            let d = m.rank() - m.connected_components()?.len();
            let values = Evaluator::new(deg, &p, Convention::Flipped)?.values(d)?;
            let poly = SnapperPoly::fit(d, &values)?;
            Ok(if d.is_multiple_of(2) { 1 } else { -1 } * poly.eval(-1)?)
        }
    }
}

/// One (matroid, polytope) pair of the Macaulay corpus with its χ values.
struct Instance {
    label: String,
    numdim: usize,
    /// χ(a) for `a = 0..=max(n, d + 2)`.
    values: Vec<i128>,
}

impl Instance {
    /// Fit through `a = 0..=d`.
    fn poly(&self) -> Result<SnapperPoly> {
        Ok(SnapperPoly::fit(self.numdim, &self.values)?)
    }
}

struct Ctx {
    settings: Settings,
    corpus: OnceCell<Vec<(Matroid, InitialDegeneration)>>,
    instances: OnceCell<std::result::Result<Vec<Instance>, String>>,
    fano: OnceCell<InitialDegeneration>,
}

impl Ctx {
    fn new(settings: Settings) -> Self {
        Ctx {
            settings,
            corpus: OnceCell::new(),
            instances: OnceCell::new(),
            fano: OnceCell::new(),
        }
    }

    fn run(&self, id: u8) -> Outcome {
        let start = Instant::now();
        let result = match id {
            1 => self.golden(),
            2 => self.dual_route(),
            3 => self.macaulay(),
            4 => self.omega_nonnegative(),
            5 => macaulay_fixtures(),
            6 => self.degree_law(),
            7 => self.structural(),
            8 => self.weight_independence(),
            9 => self.sign_laws(),
            10 => self.non_valuative(),
            11 => self.free_ehrhart(),
            12 => self.kindred(),
            _ => Err(anyhow!("no criterion {id}")),
        };
        let (passed, detail) = match result {
            Ok(detail) => (true, detail),
            Err(e) => (false, format!("{e:#}")),
        };
        Outcome {
            id,
            name: NAMES.get(id as usize - 1).copied().unwrap_or("unknown"),
            passed,
            detail,
            elapsed: start.elapsed(),
        }
    }

    fn corpus(&self) -> Result<&[(Matroid, InitialDegeneration)]> {
        if let Some(c) = self.corpus.get() {
            return Ok(c);
        }
        let mut out = Vec::new();
        for m in corpus::loopless_upto(self.settings.max_n())? {
            let w = sample_weight(&m, self.settings.seed)?;
            let deg = initial_degeneration(&m, &w)?;
            out.push((m, deg));
        }
        Ok(self.corpus.get_or_init(|| out))
    }

    fn fano(&self) -> Result<&InitialDegeneration> {
        if let Some(d) = self.fano.get() {
            return Ok(d);
        }
        let m = Matroid::fano();
        let deg = initial_degeneration(&m, &sample_weight(&m, self.settings.seed)?)?;
        Ok(self.fano.get_or_init(|| deg))
    }

    fn instances(&self) -> Result<&[Instance]> {
        let built = self.instances.get_or_init(|| {
            self.build_instances().map_err(|e| format!("{e:#}"))
        });
        built.as_deref().map_err(|e| anyhow!("{e}"))
    }

    fn build_instances(&self) -> Result<Vec<Instance>> {
        let mut out = Vec::new();
        for (m, deg) in self.corpus()? {
            for (name, p) in corpus::polytopes_for(m, self.settings.seed)? {
                let label = format!("{} with {name}", describe(m));
                let numdim = numerical_dimension(m, &p).with_context(|| label.clone())?;
                let upto = m.n().max(numdim + 2);
                let values = Evaluator::new(deg, &p, self.settings.convention)?
                    .values(upto)
                    .with_context(|| label.clone())?;
                out.push(Instance {
                    label,
                    numdim,
                    values,
                });
            }
        }
        Ok(out)
    }

    fn golden(&self) -> Result<String> {
        let m = Matroid::uniform(2, 3)?;
        let w = Weight::certify_for(&m, vec![0, 1, 3])?;
        let deg = initial_degeneration(&m, &w)?;
        let chain = |text: &str| Chain::parse(3, text);
        let components = [chain("3")?, chain("1,3")?, chain("2,3")?];
        ensure!(
            deg.components() == components,
            "components {:?}",
            deg.components().iter().map(ToString::to_string).collect::<Vec<_>>()
        );
        let expected: BTreeMap<String, i64> = [("3", 1), ("1,3", 1), ("2,3", 1), ("3<1,3", -1), ("3<2,3", -1)]
            .into_iter()
            .map(|(c, v)| (c.to_string(), v))
            .collect();
        let found: BTreeMap<String, i64> = deg.support().map(|(c, v)| (c.to_string(), v)).collect();
        ensure!(found == expected, "c-map {found:?}");
        ensure!(deg.coefficient_sum() == 1, "sum of c is {}", deg.coefficient_sum());
        let p = pair_polytope(3, &[1, 1, 1])?;
        let eval = Evaluator::new(&deg, &p, self.settings.convention)?;
        for a in 0..=4u64 {
            let chi = eval.chi(a)?;
            ensure!(chi == 3 * a as i128 + 1, "chi({a}) = {chi}, expected {}", 3 * a + 1);
        }
        Ok("components, c-map, sum c = 1 and chi(a) = 3a+1 for a = 0..4".into())
    }

    fn dual_route(&self) -> Result<String> {
        let count = if self.settings.full() { 25 } else { 5 };
        let mut checked = 0usize;
        let mut run = |m: &Matroid, deg: &InitialDegeneration, maps: usize| -> Result<()> {
            let dilworth = m.dilworth_truncation()?;
            for a in corpus::pair_maps(m.n(), maps, self.settings.seed) {
                let p = pair_polytope(m.n(), &a)?;
                let chi = Evaluator::new(deg, &p, self.settings.convention)?.chi(1)?;
                let oracle = pairs_sum(&dilworth, &a)?;
                ensure!(
                    chi == oracle,
                    "{} with pair weights {a:?}: chi = {chi}, pairs oracle = {oracle}",
                    describe(m)
                );
                checked += 1;
            }
            Ok(())
        };
        for (m, deg) in self.corpus()? {
            run(m, deg, count)?;
        }
        if self.settings.full() {
            let deg = self.fano()?;
            run(deg.matroid(), deg, 5)?;
        }
        Ok(format!("{checked} (matroid, pair map) cases agree"))
    }

    fn macaulay(&self) -> Result<String> {
        let instances = self.instances()?;
        for inst in instances {
            let h = inst.poly()?.hstar();
            let verdict = macaulay_check(h.as_slice());
            ensure!(verdict.ok, "{}: h* = ({h}) gives {verdict}", inst.label);
        }
        Ok(format!("{} h*-vectors are Macaulay", instances.len()))
    }

    fn omega_nonnegative(&self) -> Result<String> {
        let max_n = if self.settings.full() { 6 } else { 4 };
        let mut checked = 0usize;
        let mut check = |deg: &InitialDegeneration| -> Result<()> {
            let m = deg.matroid();
            let value = self.omega(deg)?;
            ensure!(value >= 0, "omega({}) = {value}", describe(m));
            checked += 1;
            Ok(())
        };
        for m in corpus::loopless_upto(max_n)? {
            check(&initial_degeneration(&m, &sample_weight(&m, self.settings.seed)?)?)?;
        }
        if self.settings.full() {
            check(self.fano()?)?;
        }
        Ok(format!("omega >= 0 on {checked} matroids"))
    }

    fn omega(&self, deg: &InitialDegeneration) -> Result<i128> {
        omega_with(deg, self.settings.convention)
    }

    fn degree_law(&self) -> Result<String> {
        let instances = self.instances()?;
        for inst in instances {
            let d = inst.numdim;
            // Fit with slack up to degree n and read off the true degree.
            let slack = inst.values.len() - 1;
            let wide = SnapperPoly::fit(slack, &inst.values)?;
            let degree = wide
                .monomial_coefficients()
                .iter()
                .rposition(|c| *c.numer() != 0)
                .unwrap_or(0);
            ensure!(
                degree == d,
                "{}: interpolated degree {degree}, numerical dimension {d}",
                inst.label
            );
            let poly = inst.poly()?;
            for a in d + 1..=d + 2 {
                let fitted = poly.eval(a as i64)?;
                ensure!(
                    fitted == inst.values[a],
                    "{}: interpolant gives {fitted} at a = {a}, chi = {}",
                    inst.label,
                    inst.values[a]
                );
            }
        }
        Ok(format!("degree law holds on {} instances", instances.len()))
    }

    fn structural(&self) -> Result<String> {
        let mut degs: Vec<&InitialDegeneration> = self.corpus()?.iter().map(|(_, d)| d).collect();
        if self.settings.full() {
            degs.push(self.fano()?);
        }
        for deg in &degs {
            let label = describe(deg.matroid());
            ensure!(deg.coefficient_sum() == 1, "{label}: sum of c is {}", deg.coefficient_sum());
            if let Some(e) = deg.entries().iter().find(|e| !e.indicator && e.coefficient != 0) {
                bail!("{label}: c = {} on {} where the indicator is 0", e.coefficient, e.chain);
            }
            if let Err(v) = multiplicity_certificate(deg.matroid(), deg.weight())? {
                bail!(
                    "{label}: {} meets both {} and {}",
                    v.sigma,
                    v.first,
                    v.second
                );
            }
        }
        Ok(format!("invariants hold on {} degenerations", degs.len()))
    }

    fn weight_independence(&self) -> Result<String> {
        let seeds = [self.settings.seed, self.settings.seed + 1, self.settings.seed + 2];
        let mut checked = 0usize;
        let mut compare = |m: &Matroid, polytopes: &[(String, SubmodularSpec)]| -> Result<()> {
            let mut seen: Option<(Vec<Vec<i128>>, i128)> = None;
            let mut weights = Vec::new();
            for &seed in &seeds {
                let deg = initial_degeneration(m, &sample_weight(m, seed)?)?;
                weights.push(deg.weight().values().to_vec());
                let mut profile = Vec::new();
                for (_, p) in polytopes {
                    let d = numerical_dimension(m, p)?;
                    let values = Evaluator::new(&deg, p, self.settings.convention)?.values(d + 2)?;
                    let h = SnapperPoly::fit(d, &values)?.hstar();
                    profile.push(values.into_iter().chain(h.0).collect());
                }
                let current = (profile, self.omega(&deg)?);
                match &seen {
                    None => seen = Some(current),
                    Some(first) => ensure!(
                        *first == current,
                        "{}: results differ between seeds {} and {seed}",
                        describe(m),
                        seeds[0]
                    ),
                }
            }
            weights.dedup();
            // On one element every weight normalizes to (0).
            ensure!(
                m.n() < 2 || weights.len() == seeds.len(),
                "{}: seeds gave equal weights",
                describe(m)
            );
            checked += 1;
            Ok(())
        };
        for (m, _) in self.corpus()? {
            compare(m, &corpus::polytopes_for(m, self.settings.seed)?)?;
        }
        if self.settings.full() {
            let fano = Matroid::fano();
            let p = vec![("segments".to_string(), pair_polytope(7, &[1; 21])?)];
            compare(&fano, &p)?;
        }
        Ok(format!("chi, h* and omega agree across 3 seeds on {checked} matroids"))
    }

    fn sign_laws(&self) -> Result<String> {
        let instances = self.instances()?;
        for inst in instances {
            let poly = inst.poly()?;
            ensure!(sign_law_holds(&poly)?, "{}: sign law fails", inst.label);
            hstar_of(&poly).with_context(|| inst.label.clone())?;
        }
        Ok(format!("sign and endpoint laws hold on {} instances", instances.len()))
    }

    fn non_valuative(&self) -> Result<String> {
        let set = |a: usize, b: usize| Subset::from_elements([a, b]);
        let all: Vec<Subset> = (1..=4)
            .flat_map(|i| (i + 1..=4).map(move |j| set(i, j)))
            .collect();
        let without = |drop: &[Subset]| -> Result<Matroid> {
            Ok(Matroid::validate(
                4,
                all.iter().copied().filter(|b| !drop.contains(b)),
            )?)
        };
        let m = Matroid::uniform(2, 4)?;
        let m1 = without(&[set(1, 2)])?;
        let m2 = without(&[set(3, 4)])?;
        let m12 = without(&[set(1, 2), set(3, 4)])?;
        let p = SubmodularSpec::rank(&m12);
        let signed = [(1i128, &m), (-1, &m1), (-1, &m2), (1, &m12)];

        let mut chi_sum = [0i128; 5];
        let mut h_sum: Vec<i128> = Vec::new();
        for (sign, matroid) in signed {
            let deg = initial_degeneration(matroid, &sample_weight(matroid, self.settings.seed)?)?;
            let eval = Evaluator::new(&deg, &p, self.settings.convention)?;
            let d = numerical_dimension(matroid, &p)?;
            let values = eval.values(d.max(4))?;
            for (a, slot) in chi_sum.iter_mut().enumerate() {
                *slot += sign * values[a];
            }
            let h = SnapperPoly::fit(d, &values)?.hstar();
            if h_sum.len() < h.0.len() {
                h_sum.resize(h.0.len(), 0);
            }
            for (slot, x) in h_sum.iter_mut().zip(h.0) {
                *slot += sign * x;
            }
        }
        ensure!(chi_sum == [0; 5], "alternating Snapper sum {chi_sum:?}");
        ensure!(h_sum.iter().any(|&x| x != 0), "alternating h* sum vanishes");
        let h: Vec<String> = h_sum.iter().map(ToString::to_string).collect();
        Ok(format!("Snapper sum 0 at a = 0..4, h* sum ({})", h.join(",")))
    }

    fn free_ehrhart(&self) -> Result<String> {
        let mut checked = 0usize;
        for n in 1..=self.settings.max_n() {
            let m = Matroid::uniform(n, n)?;
            let deg = initial_degeneration(&m, &sample_weight(&m, self.settings.seed)?)?;
            for (name, p) in corpus::polytopes_for(&m, self.settings.seed)? {
                let eval = Evaluator::new(&deg, &p, self.settings.convention)?;
                for a in 0..=3u64 {
                    let chi = eval.chi(a)?;
                    let count = box_count(&p, a)?;
                    ensure!(chi == count, "U({n},{n}) with {name}, a = {a}: chi = {chi}, box count = {count}");
                }
                checked += 1;
            }
        }
        Ok(format!("chi matches box counts on {checked} polytopes for a = 0..3"))
    }

    fn kindred(&self) -> Result<String> {
        let matroids = corpus::all_upto(4)?;
        let mut projections = 0usize;
        for m in &matroids {
            let ms = kindred_snapper(m);
            let md = multidegree_and_progenitor(&ms).with_context(|| describe(m))?;
            ensure!(md.progenitor == *m, "{}: progenitor differs", describe(m));
            ensure!(md.degree == m.rank(), "{}: multidegree {}", describe(m), md.degree);
            for bits in 0..1u64 << m.n() {
                let j = Subset::from_bits(bits);
                let restricted = kindred_snapper(&m.restriction(j)?);
                ensure!(
                    project_multisnapper(&ms, j) == restricted,
                    "{}: projection to {j:?} differs from restriction",
                    describe(m)
                );
                projections += 1;
            }
        }
        Ok(format!(
            "{} round trips and {projections} projections",
            matroids.len()
        ))
    }
}

fn macaulay_fixtures() -> Result<String> {
    for v in [&[1, 4, 21][..], &[1, 1, 28], &[1, 0, 1]] {
        ensure!(!macaulay_check(v).ok, "{v:?} accepted");
    }
    for v in [&[1][..], &[1, 2], &[1, 3, 6]] {
        ensure!(macaulay_check(v).ok, "{v:?} rejected");
    }
    Ok("3 rejected, 3 accepted".into())
}

/// Lattice points of `a·P` by scanning its bounding box and testing every
/// inequality `x(S) <= z(S)`.
pub fn box_count(p: &SubmodularSpec, a: u64) -> Result<i128> {
    let q = p.dilate(i64::try_from(a)?)?;
    let n = q.n();
    let full = Subset::full(n);
    let total = q.z(full);
    let lo: Vec<i64> = (1..=n).map(|i| total - q.z(full - Subset::singleton(i))).collect();
    let hi: Vec<i64> = (1..=n).map(|i| q.z(Subset::singleton(i))).collect();
    let subsets: Vec<Subset> = full.subsets().collect();
    let mut x = lo.clone();
    let mut count = 0i128;
    loop {
        let last = total - x[..n - 1].iter().sum::<i64>();
        x[n - 1] = last;
        if (lo[n - 1]..=hi[n - 1]).contains(&last)
            && subsets.iter().all(|&s| s.sum_of(&x) <= q.z(s))
        {
            count += 1;
        }
        // Advance the first n - 1 coordinates like an odometer.
        let mut k = 0;
        loop {
            if k + 1 >= n {
                return Ok(count);
            }
            if x[k] < hi[k] {
                x[k] += 1;
                break;
            }
            x[k] = lo[k];
            k += 1;
        }
    }
}

fn describe(m: &Matroid) -> String {
    let bases: Vec<String> = m.bases().iter().map(|b| format!("{b:?}")).collect();
    format!("M(n={}, r={}, bases {})", m.n(), m.rank(), bases.join(""))
}
