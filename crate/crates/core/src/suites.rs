//! Verification suites: each produces a [`Report`] of named checks with
//! expected and computed values.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::Scalar;
use crate::jordan::{self, CayleyPoint};
use crate::octonion::Octonion;
use crate::orbits::{self, geodesic_orbit_scan, slice_rep};
use crate::polarity::{self, asystatic_check, section_check, slice_arc_dims};
use crate::repcheck::{restricted, table_rows, verify_row};
use crate::rootsys::{self, Family, SimpleType};
use crate::samplers::{submanifold_tangent, vh_point, Kind, Sampler, SubmanifoldSample, DEFAULT_HEIGHT};
use crate::symmetry::{aut, derivation, named, Subalgebra};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Options {
    pub seed: u64,
    /// Random points per cohomogeneity estimate.
    pub samples: usize,
    pub height: i64,
    /// Parameters `n` for the classical table rows.
    pub table_ns: Vec<usize>,
    pub timings: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: 1, samples: 20, height: DEFAULT_HEIGHT, table_ns: vec![2, 3], timings: false }
    }
}

impl Options {
    pub fn sampler(&self) -> Sampler {
        Sampler::new(self.seed, self.height)
    }
}

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Quoted from the reference tables.
    Reference,
    /// Follows from a reference value by a short argument.
    Derived,
    /// Internal consistency of the artifact.
    Plumbing,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub basis: Basis,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub runtime_ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Value>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub suite: String,
    pub version: String,
    pub seed: u64,
    pub samples: usize,
    pub height: i64,
    pub checks: Vec<Check>,
    /// Solver or environment failures; checks affected are marked failed.
    pub errors: Vec<String>,
}

impl Report {
    fn new(suite: &str, opts: &Options) -> Self {
        Report {
            schema: SCHEMA_VERSION,
            suite: suite.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            seed: opts.seed,
            samples: opts.samples,
            height: opts.height,
            checks: Vec::new(),
            errors: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.errors.is_empty() && self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn merge(reports: Vec<Report>, opts: &Options) -> Report {
        let mut out = Report::new("all", opts);
        for r in reports {
            out.checks.extend(r.checks);
            out.errors.extend(r.errors);
        }
        out
    }
}

/// Result of a single check body.
pub struct Outcome {
    pub computed: String,
    pub pass: bool,
    pub witness: Option<Value>,
}

impl Outcome {
    pub fn eq<T: PartialEq + std::fmt::Debug>(computed: T, expected: &T) -> Self {
        Outcome { pass: computed == *expected, computed: format!("{computed:?}"), witness: None }
    }

    pub fn with_witness(mut self, w: Value) -> Self {
        self.witness = Some(w);
        self
    }
}

struct Meta<'a> {
    id: String,
    anchor: &'a str,
    basis: Basis,
    expected: String,
}

fn meta<'a>(id: impl Into<String>, anchor: &'a str, basis: Basis, expected: impl std::fmt::Debug) -> Meta<'a> {
    Meta { id: id.into(), anchor, basis, expected: format!("{expected:?}") }
}

fn run(report: &mut Report, opts: &Options, s: Meta<'_>, body: impl FnOnce() -> Result<Outcome>) {
    let start = Instant::now();
    let result = body();
    let runtime_ms = opts.timings.then(|| start.elapsed().as_millis() as u64);
    let check = match result {
        Ok(o) => Check { id: s.id, anchor: s.anchor.into(), basis: s.basis, expected: s.expected, computed: o.computed, pass: o.pass, runtime_ms, witness: o.witness },
        Err(e) => {
            report.errors.push(format!("{}: {e}", s.id));
            Check { id: s.id, anchor: s.anchor.into(), basis: s.basis, expected: s.expected, computed: format!("error: {e}"), pass: false, runtime_ms, witness: None }
        }
    };
    report.checks.push(check);
}

/// Dimensions of the derivation algebras and of the basepoint stabilizer.
pub fn algebras(opts: &Options) -> Report {
    let mut r = Report::new("algebras", opts);
    run(&mut r, opts, meta("g2.dim", "derivations of the octonions", Basis::Reference, 14), || Ok(Outcome::eq(named::g2()?.dim(), &14)));
    run(&mut r, opts, meta("f4.dim", "derivations of the Jordan algebra", Basis::Reference, 52), || Ok(Outcome::eq(named::f4()?.dim(), &52)));
    run(&mut r, opts, meta("f4.closed", "derivations of the Jordan algebra", Basis::Plumbing, true), || {
        let f = named::f4()?;
        Ok(Outcome::eq(f.is_bracket_closed() && f.basis().iter().all(derivation::is_derivation), &true))
    });
    run(&mut r, opts, meta("spin9.dim", "stabilizer of the basepoint", Basis::Reference, 36), || Ok(Outcome::eq(named::spin9()?.dim(), &36)));
    r
}

/// One row of the table of totally geodesic submanifolds.
#[derive(Debug, Clone, Copy)]
pub struct Table4Row {
    pub kind: Kind,
    pub z: usize,
    pub n: usize,
    pub cohomogeneity: usize,
    /// Polarity of the action of `N(P)` on the plane.
    pub action_polar: bool,
    /// Polarity of its slice representation at the basepoint.
    pub slice_polar: bool,
}

const fn row(kind: Kind, z: usize, n: usize, cohomogeneity: usize, action_polar: bool, slice_polar: bool) -> Table4Row {
    Table4Row { kind, z, n, cohomogeneity, action_polar, slice_polar }
}

pub const TABLE4: [Table4Row; 12] = [
    row(Kind::Point, 36, 36, 1, true, true),
    row(Kind::RP2, 14, 17, 2, true, true),
    row(Kind::CP2, 8, 16, 2, true, true),
    row(Kind::HP2, 3, 24, 1, true, true),
    row(Kind::Sphere(1), 21, 22, 2, true, true),
    row(Kind::Sphere(2), 15, 18, 2, true, true),
    row(Kind::Sphere(3), 10, 16, 3, false, false),
    row(Kind::Sphere(4), 6, 16, 3, false, true),
    row(Kind::Sphere(5), 3, 18, 2, true, true),
    row(Kind::Sphere(6), 1, 22, 2, true, true),
    row(Kind::Sphere(7), 0, 28, 2, true, true),
    row(Kind::Sphere(8), 0, 36, 1, true, true),
];

/// Computed quantities of one table row.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Table4Computed {
    pub z: usize,
    pub n: usize,
    pub n_span_preserver: usize,
    pub cohomogeneity: usize,
    pub genericity_warning: bool,
    pub slice: polarity::PolarityVerdict,
}

pub fn table4_row(row: &Table4Row, opts: &Options) -> Result<Table4Computed> {
    let f = named::f4()?;
    let mut sampler = opts.sampler();
    let mut sample = SubmanifoldSample::draw(row.kind, &mut sampler, 2)?;
    let z = named::annihilator(&f, &sample.linear_span);
    let n = named::preserver(&f, &mut sample, &mut sampler)?.algebra;
    let span_preserver = f.preserver_subspace("n_span", &sample.linear_span);
    let c = orbits::cohomogeneity(&n, opts.samples, &mut sampler)?;
    let slice = slice_rep(&n, &CayleyPoint::basepoint())?;
    let verdict = polarity::rep_polar_test(&slice, &mut sampler)?;
    Ok(Table4Computed {
        z: z.dim(),
        n: n.dim(),
        n_span_preserver: span_preserver.dim(),
        cohomogeneity: c.cohomogeneity,
        genericity_warning: c.genericity_warning,
        slice: verdict,
    })
}

type Getter = fn(&Table4Computed) -> usize;

const TABLE4_ANCHOR: &str = "totally geodesic submanifolds: Z(P), N(P), cohomogeneity, slice polarity";

pub fn table4(opts: &Options) -> Report {
    let mut r = Report::new("verify-table4", opts);
    if let Err(e) = named::f4() {
        r.errors.push(format!("f4: {e}"));
        return r;
    }
    let computed: Vec<(Table4Row, Result<Table4Computed>, u64)> = TABLE4
        .par_iter()
        .map(|row| {
            let start = Instant::now();
            (*row, table4_row(row, opts), start.elapsed().as_millis() as u64)
        })
        .collect();
    for (row, res, ms) in computed {
        let name = row.kind.name();
        let fields: [(&str, usize, Getter); 3] =
            [("Z", row.z, |c| c.z), ("N", row.n, |c| c.n), ("cohomogeneity", row.cohomogeneity, |c| c.cohomogeneity)];
        for (field, expected, get) in fields {
            run(&mut r, opts, meta(format!("table4.{name}.{field}"), TABLE4_ANCHOR, Basis::Reference, expected), || {
                let c = res.as_ref().map_err(clone_err)?;
                Ok(Outcome::eq(get(c), &expected))
            });
        }
        run(&mut r, opts, meta(format!("table4.{name}.N-span"), "N(P) equals the preserver of the linear span of P", Basis::Plumbing, row.n), || {
            let c = res.as_ref().map_err(clone_err)?;
            Ok(Outcome::eq(c.n_span_preserver, &c.n))
        });
        let basis = if row.slice_polar == row.action_polar { Basis::Reference } else { Basis::Derived };
        run(&mut r, opts, meta(format!("table4.{name}.slice-polar"), TABLE4_ANCHOR, basis, row.slice_polar), || {
            let c = res.as_ref().map_err(clone_err)?;
            let o = Outcome::eq(c.slice.polar, &row.slice_polar);
            Ok(match &c.slice.violation {
                Some(v) => o.with_witness(json!(v)),
                None => o,
            })
        });
        if opts.timings {
            if let Some(last) = r.checks.last_mut() {
                last.runtime_ms = Some(ms);
            }
        }
    }
    r
}

fn clone_err(e: &Error) -> Error {
    Error::Unstable(e.to_string())
}

/// Cohomogeneity-one scans along the circle through `E11` and `E22`.
pub fn table3_cohom1(opts: &Options) -> Report {
    let mut r = Report::new("verify-table3-cohom1", opts);
    let cases: [(&str, fn() -> Result<Subalgebra>, usize, (usize, usize)); 2] =
        [("spin9", named::spin9, 0, (15, 7)), ("sp3+sp1", restricted::sp3_sp1, 4, (7, 4))];
    for (name, build, u, expected) in cases {
        run(&mut r, opts, meta(format!("table3.{name}.cohomogeneity"), "cohomogeneity-one actions", Basis::Reference, 1), || {
            Ok(Outcome::eq(orbits::cohomogeneity(&build()?, opts.samples, &mut opts.sampler())?.cohomogeneity, &1))
        });
        run(&mut r, opts, meta(format!("table3.{name}.multiplicities"), "cohomogeneity-one multiplicities", Basis::Reference, expected), || {
            let scan = geodesic_orbit_scan(&build()?, &Octonion::basis(u))?;
            let m = scan.multiplicities.clone().unwrap_or_default();
            let got = if m.len() == 2 { Some((m[0], m[1])) } else { None };
            let dips: Vec<Value> = scan
                .profile
                .iter()
                .filter(|p| p.orbit_dim < scan.regular_orbit_dim)
                .map(|p| json!({"t": p.param.as_ref().map_or("inf".to_string(), |t| t.to_string()), "orbit_dim": p.orbit_dim}))
                .collect();
            Ok(Outcome::eq(got, &Some(expected)).with_witness(json!({"dips": dips, "regular_orbit_dim": scan.regular_orbit_dim})))
        });
    }
    r
}

/// Principal isotropy of the `so3+g2` action at a point of the fixed-set family.
fn vh_reference_point() -> Result<CayleyPoint> {
    vh_point(&Scalar::new(2, 7), &Scalar::new(3, 7), &Scalar::new(6, 7))
}

pub fn g2so3(opts: &Options) -> Report {
    let mut r = Report::new("verify-g2so3", opts);
    let anchor = "so3 + g2 acting by conjugation and octonion automorphisms";
    run(&mut r, opts, meta("g2so3.cohomogeneity", anchor, Basis::Reference, 2), || {
        Ok(Outcome::eq(orbits::cohomogeneity(&named::so3_g2()?, opts.samples, &mut opts.sampler())?.cohomogeneity, &2))
    });
    run(&mut r, opts, meta("g2so3.slice", "slice representation at the basepoint", Basis::Derived, (14, 15, true, 2)), || {
        let sl = slice_rep(&named::so3_g2()?, &CayleyPoint::basepoint())?;
        let v = polarity::rep_polar_test(&sl, &mut opts.sampler())?;
        Ok(Outcome::eq((sl.ambient_dim(), sl.dim(), v.polar, v.cohomogeneity), &(14, 15, true, 2)))
    });
    run(&mut r, opts, meta("g2so3.principal-isotropy", "principal isotropy at a fixed-set point", Basis::Derived, "sp1 (dim 3)"), || {
        let iso = named::stabilizer_point(&named::so3_g2()?, &vh_reference_point()?);
        let sp1 = named::sp1_right();
        let same = iso.dim() == 3 && iso.contains_algebra(&sp1);
        Ok(Outcome { computed: format!("dim {}, equals sp1: {same}", iso.dim()), pass: same, witness: None })
    });
    run(&mut r, opts, meta("g2so3.fixed-set", "fixed set of the principal isotropy", Basis::Reference, 2), || {
        let d = orbits::fixed_set(named::sp1_right().basis(), &[aut::h1(), aut::h2()], &vh_reference_point()?)?;
        Ok(Outcome::eq(d, &2))
    });
    run(&mut r, opts, meta("g2so3.asystatic", "asystaticity criterion", Basis::Derived, true), || {
        let q = vh_reference_point()?;
        let iso = named::stabilizer_point(&named::so3_g2()?, &q);
        let rep = asystatic_check(iso.basis(), &[aut::h1(), aut::h2()], &q, 2)?;
        Ok(Outcome { computed: format!("fixed {} vs cohomogeneity {}", rep.fixed_dim, rep.cohomogeneity), pass: rep.pass, witness: None })
    });
    run(&mut r, opts, meta("g2so3.section", "fixed-set family as a section", Basis::Derived, true), || {
        let mut sampler = opts.sampler();
        let sample = SubmanifoldSample::draw(Kind::VH, &mut sampler, 4)?;
        let c = section_check(&named::so3_g2()?, &sample, 2);
        Ok(Outcome { computed: format!("{} points, {} failures", sample.points.len(), c.failures.len()), pass: c.pass, witness: (!c.pass).then(|| json!(c.failures)) })
    });
    run(&mut r, opts, meta("g2so3.normalizer-g2", "normalizer of the principal isotropy in g2", Basis::Reference, 6), || {
        Ok(Outcome::eq(named::g2()?.normalizer("n", &named::sp1_right()).dim(), &6))
    });
    run(&mut r, opts, meta("g2so3.normalizer", "normalizer of the principal isotropy in so3 + g2", Basis::Reference, 9), || {
        Ok(Outcome::eq(named::so3_g2()?.normalizer("n", &named::sp1_right()).dim(), &9))
    });
    run(&mut r, opts, meta("g2so3.reduction", "reduction representation of so3 + so4 on R12", Basis::Reference, (true, 3)), || {
        let v = polarity::rep_polar_test(&restricted::so3_so4()?, &mut opts.sampler())?;
        Ok(Outcome::eq((v.polar, v.cohomogeneity), &(true, 3)))
    });
    r
}

/// The algebra and its slice representation at the basepoint for each arc case.
fn arc_cases() -> Vec<(&'static str, &'static str, Kind, bool, (usize, usize))> {
    vec![
        ("spin7+so2", "slice of spin7 + so2 at the basepoint", Kind::Sphere(1), true, (8, 13)),
        ("su4+su2", "slice of su4 + su2 at the basepoint", Kind::Sphere(2), true, (9, 12)),
        ("su3+su3", "slice of su3 + su3 at the basepoint", Kind::CP2, false, (7, 8)),
    ]
}

/// `N(P)`, moved by the cyclic automorphism when `E33` is to become the basepoint.
fn normalizer_at(kind: Kind, rotate: bool) -> Result<Subalgebra> {
    let f = named::f4()?;
    let n = f.preserver_subspace(format!("N({})", kind.name()), &kind.ambient_span());
    if rotate {
        n.conjugate(n.label().to_string(), aut::cyclic().matrix())
    } else {
        Ok(n)
    }
}

pub fn slice_arcs(opts: &Options) -> Report {
    let mut r = Report::new("verify-slice-arcs", opts);
    for (name, anchor, kind, rotate, expected) in arc_cases() {
        run(&mut r, opts, meta(format!("arcs.{name}"), anchor, Basis::Reference, expected), || {
            let sl = slice_rep(&normalizer_at(kind, rotate)?, &CayleyPoint::basepoint())?;
            let arcs = slice_arc_dims(&sl, &mut opts.sampler())?;
            let mut o = Outcome::eq(arcs.dims, &expected);
            o.pass &= arcs.agree;
            Ok(o.with_witness(json!(arcs)))
        });
    }
    r
}

/// Fixed dimension of the principal isotropy at a regular point.
pub fn asystatic(opts: &Options) -> Report {
    let mut r = Report::new("verify-asystatic", opts);
    let cases: [(&str, usize, usize); 3] = [("spin9", 1, 1), ("spin8", 2, 2), ("spin7+so2", 2, 4)];
    for (name, cohom, fixed) in cases {
        let basis = if cohom == fixed { Basis::Reference } else { Basis::Derived };
        run(&mut r, opts, meta(format!("asystatic.{name}"), "principal isotropy fixed dimension", basis, (cohom, fixed)), || {
            let g = match name {
                "spin9" => named::spin9()?,
                "spin8" => named::spin8()?,
                _ => normalizer_at(Kind::Sphere(1), false)?,
            };
            let mut sampler = opts.sampler();
            let c = orbits::cohomogeneity(&g, opts.samples, &mut sampler)?;
            let q = CayleyPoint::new(jordan::JordanElement::from_coords(c.witness.clone()))?;
            let iso = named::stabilizer_point(&g, &q);
            let rep = asystatic_check(iso.basis(), &[], &q, c.cohomogeneity)?;
            Ok(Outcome::eq((c.cohomogeneity, rep.fixed_dim), &(cohom, fixed)))
        });
    }
    r
}

/// Non-polar restrictions of the spin representation.
pub fn nonpolar(opts: &Options) -> Report {
    let mut r = Report::new("verify-nonpolar", opts);
    let cases: [(&str, &str, fn() -> Result<orbits::LinearGroupAction>); 2] = [
        ("sp2+sp1+sp1", "isotropy of sp3 + sp1 on the tangent space", restricted::sp2_sp1_sp1),
        ("su2+su2", "so4 on traceless symmetric matrices inside spin9", restricted::su2_su2_spinor),
    ];
    for (name, anchor, build) in cases {
        run(&mut r, opts, meta(format!("nonpolar.{name}"), anchor, Basis::Reference, false), || {
            let act = build()?;
            let v = polarity::rep_polar_test(&act, &mut opts.sampler())?;
            let rechecked = v.violation.as_ref().is_some_and(|w| w.recheck(&act.gram));
            Ok(Outcome { computed: format!("{:?}", v.polar), pass: !v.polar && rechecked, witness: v.violation.map(|w| json!(w)) })
        });
    }
    r
}

pub fn bds(opts: &Options) -> Report {
    let mut r = Report::new("verify-bds", opts);
    let d = rootsys::f4_extended_diagram();
    let cases: [(usize, &str, Vec<SimpleType>); 3] = [
        (1, "delete the second node from the left", vec![SimpleType::new(Family::A, 1), SimpleType::new(Family::C, 3)]),
        (2, "delete the middle node", vec![SimpleType::new(Family::A, 2), SimpleType::new(Family::A, 2)]),
        (4, "delete the end node of the short branch", vec![SimpleType::new(Family::B, 4)]),
    ];
    for (node, anchor, expected) in cases {
        let basis = if node == 4 { Basis::Derived } else { Basis::Reference };
        run(&mut r, opts, meta(format!("bds.node{node}"), anchor, basis, rootsys::format_types(&expected)), || {
            let got = rootsys::delete_nodes(&d, &BTreeSet::from([node]))?;
            Ok(Outcome { pass: got == expected, computed: rootsys::format_types(&got), witness: None })
        });
    }
    r
}

pub fn tables12(opts: &Options) -> Report {
    let mut r = Report::new("verify-tables12", opts);
    let jobs: Vec<_> = table_rows()
        .into_iter()
        .flat_map(|row| {
            let ns = if row.min_n.is_some() { opts.table_ns.clone() } else { vec![0] };
            ns.into_iter().map(move |n| (row.clone(), n))
        })
        .collect();
    let results: Vec<_> = jobs.par_iter().map(|(row, n)| verify_row(row, *n, opts.seed)).collect();
    for ((row, n), res) in jobs.iter().zip(results) {
        let suffix = if row.min_n.is_some() { format!(".n{n}") } else { String::new() };
        let expected = (row.quotient_dim + 1, row.polar);
        run(&mut r, opts, meta(format!("tables12.{}{suffix}", row.id), &row.orbit_space, Basis::Reference, expected), || {
            let rep = res?;
            let mut o = Outcome::eq((rep.cohomogeneity, rep.polar), &expected);
            o.witness = rep.witness.map(|w| json!(w));
            Ok(o)
        });
    }
    r
}

pub fn chain(opts: &Options) -> Report {
    let mut r = Report::new("verify-chain", opts);
    let p = CayleyPoint::basepoint();
    let algebras: [(&str, Kind, fn() -> Result<Subalgebra>, usize); 3] = [
        ("g2", Kind::RP2, named::g2, 2),
        ("su3", Kind::CP2, named::su3, 4),
        ("sp1", Kind::HP2, || Ok(named::sp1_right()), 8),
    ];
    for (name, kind, build, expected) in algebras {
        run(&mut r, opts, meta(format!("chain.{name}"), "chain of totally geodesic submanifolds", Basis::Reference, expected), || {
            let fixed = orbits::fixed_subspace(build()?.basis(), &[], &p)?;
            let tangent = submanifold_tangent(kind, &p)?;
            let mut o = Outcome::eq(fixed.dim(), &expected);
            o.pass &= fixed == tangent;
            Ok(o)
        });
    }
    run(&mut r, opts, meta("chain.inclusions", "chain of totally geodesic submanifolds", Basis::Derived, "g2 > su3 > sp1, 6 < 9 < 15"), || {
        let (g2, su3, sp1) = (named::g2()?, named::su3()?, named::sp1_right());
        let spans: Vec<_> = [Kind::RP2, Kind::CP2, Kind::HP2].iter().map(|k| k.ambient_span()).collect();
        let algebras_ok = g2.contains_algebra(&su3) && su3.contains_algebra(&sp1) && g2.dim() > su3.dim() && su3.dim() > sp1.dim();
        let spans_ok = spans.windows(2).all(|w| w[1].contains_subspace(&w[0]) && w[1].dim() > w[0].dim());
        let dims: Vec<usize> = spans.iter().map(|s| s.dim()).collect();
        Ok(Outcome { computed: format!("algebras nested: {algebras_ok}, span dims {dims:?}"), pass: algebras_ok && spans_ok, witness: None })
    });
    r
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Suite {
    Algebras,
    Table4,
    Table3Cohom1,
    G2So3,
    SliceArcs,
    Asystatic,
    NonPolar,
    Bds,
    Tables12,
    Chain,
}

impl Suite {
    pub const ALL: [Suite; 10] =
        [Suite::Algebras, Suite::Table4, Suite::Table3Cohom1, Suite::G2So3, Suite::SliceArcs, Suite::Asystatic, Suite::NonPolar, Suite::Bds, Suite::Tables12, Suite::Chain];

    pub fn run(self, opts: &Options) -> Report {
        match self {
            Suite::Algebras => algebras(opts),
            Suite::Table4 => table4(opts),
            Suite::Table3Cohom1 => table3_cohom1(opts),
            Suite::G2So3 => g2so3(opts),
            Suite::SliceArcs => slice_arcs(opts),
            Suite::Asystatic => asystatic(opts),
            Suite::NonPolar => nonpolar(opts),
            Suite::Bds => bds(opts),
            Suite::Tables12 => tables12(opts),
            Suite::Chain => chain(opts),
        }
    }
}

pub fn run_all(opts: &Options) -> Report {
    Report::merge(Suite::ALL.iter().map(|s| s.run(opts)).collect(), opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bds_suite_has_three_passing_checks() {
        let r = bds(&Options::default());
        assert_eq!(r.checks.len(), 3);
        assert!(r.passed());
    }

    #[test]
    fn errors_become_failed_checks() {
        let opts = Options::default();
        let mut r = Report::new("t", &opts);
        run(&mut r, &opts, meta("x", "a", Basis::Plumbing, 1), || Err(Error::Unstable("boom".into())));
        assert!(!r.passed());
        assert_eq!(r.errors.len(), 1);
        assert!(r.checks[0].computed.contains("boom"));
    }

    #[test]
    fn reports_are_stable_without_timings() {
        let opts = Options::default();
        let a = serde_json::to_string(&chain(&opts)).unwrap();
        let b = serde_json::to_string(&chain(&opts)).unwrap();
        assert_eq!(a, b);
        assert!(!a.contains("runtime_ms"));
    }
}
