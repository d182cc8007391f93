//! Acceptance criteria, one line each. Exact checks use zero tolerance;
//! sampled checks must pass for each of [`SEEDS`].

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use cayley_core::jordan::CayleyPoint;
use cayley_core::octonion::Octonion;
use cayley_core::orbits::{self, geodesic_orbit_scan};
use cayley_core::suites::{self, Options, Report};
use cayley_core::symmetry::named;

const SEEDS: [u64; 3] = [1, 2, 3];

fn opts(seed: u64) -> Options {
    Options { seed, ..Options::default() }
}

fn describe(r: &Report) -> String {
    let bad: Vec<String> = r.failures().map(|c| format!("{}: expected {}, got {}", c.id, c.expected, c.computed)).collect();
    bad.join("; ")
}

/// Runs `suite` for every seed; all checks must pass.
fn across_seeds(suite: fn(&Options) -> Report) -> Result<String, String> {
    let mut n = 0;
    for seed in SEEDS {
        let r = suite(&opts(seed));
        if !r.passed() {
            return Err(format!("seed {seed}: {}", describe(&r)));
        }
        n = r.checks.len();
    }
    Ok(format!("{n} checks x {} seeds", SEEDS.len()))
}

fn once(suite: fn(&Options) -> Report) -> Result<String, String> {
    let r = suite(&opts(1));
    if r.passed() {
        Ok(format!("{} checks", r.checks.len()))
    } else {
        Err(describe(&r))
    }
}

fn algebra_dims() -> Result<String, String> {
    once(suites::algebras)?;
    // f4 acts transitively on the 16-dimensional plane, so the stabilizer
    // has codimension 16.
    let f = named::f4().map_err(|e| e.to_string())?;
    let orbit = orbits::orbit_tangent(&f, &CayleyPoint::basepoint()).dim();
    let spin9 = named::spin9().map_err(|e| e.to_string())?.dim();
    if orbit != 16 || f.dim() - orbit != spin9 {
        return Err(format!("orbit {orbit}, f4 {}, spin9 {spin9}", f.dim()));
    }
    Ok(format!("14 / 52 / 36, orbit of p has dim {orbit}"))
}

fn geodesic_dips() -> Result<String, String> {
    once(suites::table3_cohom1)?;
    let cases = [
        ("spin9", named::spin9().map_err(|e| e.to_string())?, 0, vec![("0", 0), ("inf", 8)]),
        (
            "sp3+sp1",
            cayley_core::repcheck::restricted::sp3_sp1().map_err(|e| e.to_string())?,
            4,
            vec![("0", 8), ("inf", 8), ("1", 11), ("-1", 11)],
        ),
    ];
    for (name, g, u, expected) in cases {
        let scan = geodesic_orbit_scan(&g, &Octonion::basis(u)).map_err(|e| e.to_string())?;
        let dips: BTreeSet<(String, usize)> = scan
            .profile
            .iter()
            .filter(|p| p.orbit_dim < scan.regular_orbit_dim)
            .map(|p| (p.param.as_ref().map_or("inf".into(), |t| t.to_string()), p.orbit_dim))
            .collect();
        let want: BTreeSet<(String, usize)> = expected.into_iter().map(|(t, d)| (t.to_string(), d)).collect();
        if dips != want {
            return Err(format!("{name}: dips {dips:?}, expected {want:?}"));
        }
    }
    Ok("(15, 7) and (7, 4), dips at the predicted parameters".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Result<String, String>); 10] = [
        ("algebra dimensions", algebra_dims),
        ("totally geodesic table", || across_seeds(suites::table4)),
        ("cohomogeneity-one multiplicities", geodesic_dips),
        ("slice arcs", || once(suites::slice_arcs)),
        ("so3 + g2 suite", || across_seeds(suites::g2so3)),
        ("asystaticity", || across_seeds(suites::asystatic)),
        ("non-polarity witnesses", || once(suites::nonpolar)),
        ("extended Dynkin deletions", || once(suites::bds)),
        ("classical table rows", || across_seeds(suites::tables12)),
        ("chain RP2 < CP2 < HP2", || once(suites::chain)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({detail}) [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
