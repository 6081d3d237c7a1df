//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use infcone::battery::{battery, linear_battery, BatteryIdeal};
use infcone::cone::{cone_at_infinity, CoordinateSplit};
use infcone::ideal::{reduce, s_polynomial, Ideal};
use infcone::invariants::{
    dim_degree, fiber_multiplicity, hilbert_numerator, reduced_degree, verify_theorem, FiberOptions, MonomialIdeal,
    VerifyOptions,
};
use infcone::poly::{parse_polynomial, vars, Monomial, MonomialOrder, Polynomial, Rational};
use infcone::probe::{
    lne_profile, region_fit, sample_hypersurface, tangent_directions, LneOptions, PointCloud, Verdict,
};
use num::complex::Complex64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! check {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

fn ideal(names: &[&str], gens: &[&str]) -> Ideal {
    Ideal::parse(names, gens).expect("test ideals parse")
}

fn within(start: Instant, limit: Duration) -> Outcome {
    let t = start.elapsed();
    if t < limit {
        Ok(format!("{:.2?} < {:.0?}", t, limit))
    } else {
        Err(format!("took {:.2?}, limit {:.0?}", t, limit))
    }
}

fn parabola_pipeline() -> Outcome {
    let start = Instant::now();
    let i = ideal(&["x", "y"], &["y - x^2"]);
    let r = verify_theorem(&i, 0, &VerifyOptions::default()).map_err(|e| e.to_string())?;
    let cone = Ideal::new(i.vars(), r.cone.clone()).unwrap();
    check!(cone.same_ideal(&ideal(&["x", "y"], &["x^2"])).unwrap(), "cone is {:?}", r.cone);
    check!((r.dim_x, r.dim_cone) == (1, 1), "dims {} {}", r.dim_x, r.dim_cone);
    check!(r.deg_scheme_x == 2, "degree {}", r.deg_scheme_x);
    check!(r.deg_reduced_cone == Some(1), "reduced cone degree {:?}", r.deg_reduced_cone);
    check!(r.inequality_holds == Some(true) && r.equality_holds == Some(false), "inequality not strict");
    check!(r.deg_scheme_x > r.deg_reduced_cone.unwrap(), "inequality not strict");
    let t = within(start, Duration::from_secs(1))?;
    Ok(format!("cone (x^2), dim 1 = 1, deg 2 > 1, {t}"))
}

fn hyperbola() -> Outcome {
    let i = ideal(&["x", "y"], &["x*y - 1"]);
    let options = VerifyOptions { lne: Some(LneOptions::default()), ..Default::default() };
    let r = verify_theorem(&i, 0, &options).map_err(|e| e.to_string())?;
    let cone = Ideal::new(i.vars(), r.cone.clone()).unwrap();
    check!(cone.same_ideal(&ideal(&["x", "y"], &["x*y"])).unwrap(), "cone is {:?}", r.cone);
    check!((r.dim_x, r.dim_cone) == (1, 1), "dims {} {}", r.dim_x, r.dim_cone);
    check!(r.deg_scheme_x == 2 && r.deg_scheme_cone == 2, "scheme degrees {} {}", r.deg_scheme_x, r.deg_scheme_cone);
    check!(
        r.deg_reduced_x == Some(2) && r.deg_reduced_cone == Some(2),
        "reduced degrees {:?} {:?}",
        r.deg_reduced_x,
        r.deg_reduced_cone
    );
    check!(r.equality_holds == Some(true), "equality fails");
    let lne = r.lne.ok_or("no distance profile")?;
    check!(lne.verdict == Verdict::Bounded, "verdict {} for ratios {:?}", lne.verdict, lne.ratios);
    Ok(format!("cone (xy), degrees 2 = 2, probe {}", lne.verdict))
}

fn twisted_cubic() -> Outcome {
    let start = Instant::now();
    let xyz = ["x", "y", "z"];
    let i = ideal(&xyz, &["y - x^2", "z - x^3"]);
    let gb = i.groebner_basis(MonomialOrder::GrevLex).map_err(|e| e.to_string())?;
    let expected: Vec<Polynomial> =
        ["x^2 - y", "x*y - z", "y^2 - x*z"].iter().map(|s| parse_polynomial(s, &xyz).unwrap()).collect();
    check!(gb.len() == 3 && expected.iter().all(|e| gb.contains(e)), "basis {:?}", gb);
    let cone = cone_at_infinity(&i).map_err(|e| e.to_string())?;
    let want: Vec<Polynomial> =
        ["x^2", "x*y", "y^2 - x*z"].iter().map(|s| parse_polynomial(s, &xyz).unwrap()).collect();
    check!(
        cone.generators().len() == 3 && want.iter().all(|w| cone.generators().contains(w)),
        "cone {:?}",
        cone.generators()
    );
    let hx = dim_degree(&i).map_err(|e| e.to_string())?;
    let hc = dim_degree(&cone.cone_ideal).map_err(|e| e.to_string())?;
    check!((hx.dim, hc.dim) == (1, 1), "dims {} {}", hx.dim, hc.dim);
    check!(hx.degree == 3 && hc.degree == 3, "scheme degrees {} {}", hx.degree, hc.degree);
    let red = reduced_degree(&cone.cone_ideal, 0).map_err(|e| e.to_string())?;
    check!(red == 1, "reduced cone degree {red}");
    let t = within(start, Duration::from_secs(5))?;
    Ok(format!("basis and cone exact, deg 3 = 3 (scheme), reduced cone 1, {t}"))
}

fn linear_subspaces() -> Outcome {
    let spaces = linear_battery(10, 2024).map_err(|e| e.to_string())?;
    let mut dims = Vec::new();
    for e in &spaces {
        let h = dim_degree(&e.ideal).map_err(|err| err.to_string())?;
        let cone = cone_at_infinity(&e.ideal).map_err(|err| err.to_string())?;
        let red = reduced_degree(&cone.cone_ideal, 1).map_err(|err| err.to_string())?;
        check!(h.degree == 1 && red == 1, "{}: degree {}, reduced cone degree {red}", e.name, h.degree);
        check!((1..=3).contains(&h.dim), "{}: dimension {}", e.name, h.dim);
        dims.push(h.dim);
    }
    Ok(format!("10 subspaces of dims {dims:?}, all degree 1 / 1"))
}

fn full_battery() -> Vec<BatteryIdeal> {
    let mut all = battery();
    all.extend(linear_battery(4, 7).expect("linear battery"));
    all
}

fn sheet_counts() -> Outcome {
    let all = battery();
    check!(all.len() >= 12, "battery has only {} ideals", all.len());
    for e in &all {
        let h = dim_degree(&e.ideal).map_err(|err| err.to_string())?;
        check!(h.degree == e.expected.degree, "{}: Hilbert degree {}", e.name, h.degree);
        for seed in 0..3 {
            let m = fiber_multiplicity(&e.ideal, seed, &FiberOptions::default()).map_err(|err| err.to_string())?;
            check!(m as u64 == h.degree, "{} seed {seed}: fiber length {m} vs degree {}", e.name, h.degree);
        }
    }
    Ok(format!("{} ideals x 3 seeds, Hilbert degree = fiber length", all.len()))
}

fn dimensions() -> Outcome {
    let all = full_battery();
    for e in &all {
        let h = dim_degree(&e.ideal).map_err(|err| err.to_string())?;
        let cone = cone_at_infinity(&e.ideal).map_err(|err| err.to_string())?;
        let hc = dim_degree(&cone.cone_ideal).map_err(|err| err.to_string())?;
        check!(h.dim == hc.dim, "{}: dim {} vs cone dim {}", e.name, h.dim, hc.dim);
        check!(h.dim == e.expected.dim, "{}: dim {} expected {}", e.name, h.dim, e.expected.dim);
    }
    Ok(format!("{} ideals, dim X = dim C everywhere", all.len()))
}

fn groebner_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let all = full_battery();
    let mut runs = 0;
    for e in &all {
        for order in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
            let gb = e.ideal.groebner_basis(order).map_err(|err| err.to_string())?.to_vec();
            for i in 0..gb.len() {
                for j in i + 1..gb.len() {
                    let s = s_polynomial(&gb[i], &gb[j], order).unwrap();
                    check!(reduce(&s, &gb, order).unwrap().is_zero(), "{}: S-polynomial {i},{j} survives", e.name);
                }
            }
            let again = Ideal::new(e.ideal.vars(), gb.clone()).unwrap().groebner_basis(order).unwrap();
            check!(*again == gb, "{}: basis not idempotent under {order}", e.name);
            for _ in 0..10 {
                let mut gens = e.ideal.generators().to_vec();
                gens.shuffle(&mut rng);
                let gens: Vec<Polynomial> = gens
                    .iter()
                    .map(|g| {
                        let c = Rational::new(rng.random_range(1i64..50).into(), rng.random_range(1i64..50).into());
                        g.scale(&if rng.random_bool(0.5) { c } else { -c })
                    })
                    .collect();
                let shuffled = Ideal::new(e.ideal.vars(), gens).unwrap().groebner_basis(order).unwrap();
                check!(*shuffled == gb, "{}: basis depends on generator order", e.name);
                runs += 1;
            }
        }
    }
    Ok(format!("{} ideals, {runs} shuffled runs, S-pairs reduce to 0, idempotent", all.len()))
}

fn hilbert_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for case in 0..50 {
        let n = rng.random_range(1..=4usize);
        let ngens = rng.random_range(0..=5usize);
        let gens: Vec<Monomial> =
            (0..ngens).map(|_| Monomial::new((0..n).map(|_| rng.random_range(0..=3u32)).collect())).collect();
        let series = hilbert_numerator(&MonomialIdeal::new(n, gens.clone())).series(n as u32, 9);
        for d in 0..=8u32 {
            let brute = count_standard(n, d, &gens);
            check!(series[d as usize] == brute, "case {case}: degree {d} series {} vs count {brute}", series[d as usize]);
        }
    }
    Ok("50 monomial ideals, series = standard monomial counts through degree 8".into())
}

fn count_standard(n: usize, d: u32, gens: &[Monomial]) -> i64 {
    let mut count = 0;
    let mut exps = vec![0u32; n];
    fn rec(i: usize, left: u32, exps: &mut Vec<u32>, gens: &[Monomial], count: &mut i64) {
        if i + 1 == exps.len() {
            exps[i] = left;
            let m = Monomial::new(exps.clone());
            if !gens.iter().any(|g| g.divides(&m)) {
                *count += 1;
            }
            return;
        }
        for e in 0..=left {
            exps[i] = e;
            rec(i + 1, left - e, exps, gens, count);
        }
    }
    rec(0, d, &mut exps, gens, &mut count);
    count
}

fn lne_probe() -> Outcome {
    let start = Instant::now();
    let xy = ["x", "y"];
    let options = LneOptions { radii: vec![10.0, 20.0, 40.0, 80.0], count: 400, ..Default::default() };
    let mut growth = Vec::new();
    for seed in 0..3 {
        let p = lne_profile(&parse_polynomial("y - x^2", &xy).unwrap(), &options, seed).map_err(|e| e.to_string())?;
        let g = p.ratios[3] / p.ratios[0];
        check!(p.verdict == Verdict::Growing && g >= 1.5, "parabola seed {seed}: {} {:?}", p.verdict, p.ratios);
        growth.push(format!("{g:.1}"));
    }
    for f in ["x*y - 1", "y"] {
        for seed in 0..3 {
            let p = lne_profile(&parse_polynomial(f, &xy).unwrap(), &options, seed).map_err(|e| e.to_string())?;
            let max = p.ratios.iter().copied().fold(0.0, f64::max);
            check!(
                p.verdict == Verdict::Bounded && max <= 2.0 * p.ratios[0],
                "{f} seed {seed}: {} {:?}",
                p.verdict,
                p.ratios
            );
        }
    }
    let t = within(start, Duration::from_secs(60))?;
    Ok(format!("parabola growing (last/first {}), hyperbola and line bounded, {t}", growth.join(", ")))
}

fn region_fits() -> Outcome {
    let start = Instant::now();
    let xy = vars(&["x", "y"]);
    let cubic = parse_polynomial("y - x^3", &["x", "y"]).unwrap();
    // far out, so that log(1 + |x|) is close to log |x|
    let cloud = sample_hypersurface(&cubic, (1e6, 1e9), 400, 0).map_err(|e| e.to_string())?;
    let region = region_fit(&cloud, &CoordinateSplit::identity(&xy, 1)).map_err(|e| e.to_string())?;
    check!((2.8..=3.2).contains(&region.b), "cubic exponent {}", region.b);
    check!(region.coverage(&cloud) == 1.0, "cubic region misses points");

    let parabola = parse_polynomial("y - x^2", &["x", "y"]).unwrap();
    let mut both = sample_hypersurface(&parabola, (1.0, 1e4), 400, 0).map_err(|e| e.to_string())?;
    let samples = both.len();
    // exact points of the cone x = 0
    let cone_points: Vec<Vec<Complex64>> = (0..200)
        .map(|i| {
            let t = 1.05f64.powi(i) * if i % 2 == 0 { 1.0 } else { -1.0 };
            vec![Complex64::new(0.0, 0.0), Complex64::from_polar(t.abs(), i as f64 * 0.7)]
        })
        .collect();
    let cone_cloud = PointCloud::from_complex(2, &cone_points);
    both.extend(&cone_cloud);
    let split = CoordinateSplit::with_first(&xy, &["y"]).unwrap();
    let shared = region_fit(&both, &split).map_err(|e| e.to_string())?;
    let inside = |cloud: &PointCloud, range: std::ops::Range<usize>| range.into_iter().all(|i| shared.contains(cloud, i));
    check!(inside(&both, 0..samples), "parabola samples escape the shared region");
    check!(inside(&both, samples..both.len()), "cone points escape the shared region");
    let t = within(start, Duration::from_secs(10))?;
    Ok(format!("cubic B = {:.3}, parabola and cone share A = {:.3}, B = {:.2}, {t}", region.b, shared.a, shared.b))
}

fn tangent_agreement() -> Outcome {
    let i = ideal(&["x", "y"], &["x*y - 1"]);
    let cone = cone_at_infinity(&i).map_err(|e| e.to_string())?;
    let res = tangent_directions(&i.generators()[0], &[1e1, 1e2, 1e3, 1e4], 100, 0, &cone)
        .map_err(|e| e.to_string())?;
    let r = res.residuals();
    check!(r.windows(2).all(|w| w[1] <= w[0]), "residuals not monotone: {r:?}");
    let last = *r.last().unwrap();
    check!(last <= 1e-4, "largest-scale residual {last:e}");
    Ok(format!("residuals {:?}, {} direction clusters", r.iter().map(|x| format!("{x:.1e}")).collect::<Vec<_>>(), res.clusters.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("parabola pipeline", parabola_pipeline),
        ("hyperbola", hyperbola),
        ("twisted cubic", twisted_cubic),
        ("linear battery", linear_subspaces),
        ("sheet counts", sheet_counts),
        ("dimension equality", dimensions),
        ("groebner suite", groebner_suite),
        ("hilbert oracle", hilbert_oracle),
        ("lne probe", lne_probe),
        ("region fit", region_fits),
        ("tangent directions", tangent_agreement),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("[PASS] {:>2} {name}: {detail}", n + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {:>2} {name}: {detail}", n + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
