//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero when any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use flagstab::cli::{self, Envelope, Output};
use flagstab::gitfan::{compute_fan, validate_fan, ValidateOptions};
use flagstab::picard::picard_rank;
use flagstab::ratlinalg::{cone_member, int, AffCone, QVector, RayHit, Rat};
use flagstab::rootsys::RootSystem;
use flagstab::saturated::{
    build_path, corollary_2_6_check, enumerate_saturated, qualifies, spans_containing, verify_path,
};
use flagstab::stability::{is_semistable, is_semistable_by_chamber, lemma_1_10_values, unstable_codimension};
use flagstab::weyl::{WeylElement, WeylGroup};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn setup(spec: &str) -> (RootSystem, WeylGroup) {
    let rs = RootSystem::build(spec).expect("type spec");
    let g = WeylGroup::enumerate(&rs).expect("small group");
    (rs, g)
}

fn fund(rs: &RootSystem, a: &[i64]) -> QVector {
    rs.from_fundamental(&QVector::from_ints(a))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("{what} took {t:.1?}, limit {limit:?}"))
}

/// Strictly dominant weight with fundamental coordinates p/q, p in 1..=20,
/// q in 1..=5.
fn random_chi(rs: &RootSystem, rng: &mut ChaCha8Rng) -> QVector {
    let a: QVector = (0..rs.rank())
        .map(|_| Rat::new(rng.gen_range(1..=20).into(), rng.gen_range(1..=5).into()))
        .collect();
    rs.from_fundamental(&a)
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(["flagstab", "picard", "B4", "--chi", "10,1,8,2"], &mut out, &mut err);
    ensure(code == 0, || format!("exit {code}: {}", String::from_utf8_lossy(&err)))?;
    let env: Envelope = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
    let Output::Picard(p) = env.output else {
        return Err("wrong command in output".into());
    };
    ensure(p.rank == 2, || format!("rank {}", p.rank))?;
    ensure(!p.an_caveat, || "caveat set for B4".into())?;
    within(start, Duration::from_secs(60), "B4")?;
    Ok(format!("rank 2 in {:.2?}", start.elapsed()))
}

fn criterion_2() -> Check {
    let mut notes = Vec::new();
    for (spec, chi) in [("B2", vec![1, 1]), ("B3", vec![1, 2, 3]), ("G2", vec![2, 3])] {
        let start = Instant::now();
        let (rs, g) = setup(spec);
        let sats = enumerate_saturated(&rs).map_err(|e| e.to_string())?;
        let chi = fund(&rs, &chi);
        let hits = spans_containing(&g.longest().act(&chi), &sats);
        ensure(hits.len() == 1 && sats[hits[0]].span.is_full(), || format!("{spec}: chi is not generic"))?;
        let rank = picard_rank(&rs, &g, &sats, &chi).map_err(|e| e.to_string())?;
        ensure(rank == 2 * rs.rank(), || format!("{spec}: rank {rank}"))?;
        within(start, Duration::from_secs(60), spec)?;
        notes.push(format!("{spec}={rank}"));
    }
    Ok(notes.join(", "))
}

fn criterion_3() -> Check {
    let (rs, g) = setup("A2");
    let chi = fund(&rs, &[2, 1]);
    let s2w0 = WeylElement::simple(&rs, 1).compose(&rs, g.longest());
    ensure(!is_semistable(&chi, &s2w0), || "s2 w0 is semistable".into())?;
    let codim = unstable_codimension(&rs, &g, &chi).map_err(|e| e.to_string())?;
    ensure(codim == 1, || format!("codimension {codim}"))?;
    Ok("s2 w0 unstable, codimension 1".into())
}

fn criterion_4() -> Check {
    for spec in ["B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"] {
        let rs = RootSystem::build(spec).map_err(|e| e.to_string())?;
        let vals = lemma_1_10_values(&rs);
        ensure(vals.iter().all(|v| !v.is_negative()), || format!("{spec}: negative value in {vals:?}"))?;
    }
    for spec in ["A2", "A3"] {
        let rs = RootSystem::build(spec).map_err(|e| e.to_string())?;
        ensure(lemma_1_10_values(&rs).iter().any(|v| v.is_negative()), || {
            format!("{spec}: no negative value")
        })?;
    }
    Ok("nonnegative on B2-B4, C3-C4, D4, F4, G2; negative on A2, A3".into())
}

fn criterion_5() -> Check {
    let mut notes = Vec::new();
    for spec in ["B2", "B3", "G2"] {
        let (rs, g) = setup(spec);
        let fan = compute_fan(&rs, &g, false).map_err(|e| e.to_string())?;
        for cone in &fan.cones {
            let chi = rs.from_fundamental(&cone.sample);
            let codim = unstable_codimension(&rs, &g, &chi).map_err(|e| e.to_string())?;
            ensure(codim >= 2, || format!("{spec}: codimension {codim} at {}", cone.sample))?;
        }
        notes.push(format!("{spec}: {} cones", fan.cones.len()));
    }
    Ok(notes.join(", "))
}

fn criterion_6() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut checked = 0;
    for spec in ["A2", "B2", "B3", "A3"] {
        let (rs, g) = setup(spec);
        for _ in 0..5 {
            let chi = random_chi(&rs, &mut rng);
            for w in g.elements() {
                let (a, b) = corollary_2_6_check(&rs, w, &chi);
                ensure(a == b, || format!("{spec}: mismatch at {w} for {chi}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} pairs, 0 mismatches"))
}

fn criterion_7() -> Check {
    let start = Instant::now();
    let mut paths = 0;
    for spec in ["B2", "B3"] {
        let (rs, g) = setup(spec);
        let sats = enumerate_saturated(&rs).map_err(|e| e.to_string())?;
        let chi = rs.from_fundamental(&(0..rs.rank()).map(|_| int(1)).collect());
        for w in g.elements() {
            for sat in sats.iter().filter(|s| !s.is_empty()) {
                if !qualifies(&rs, sat, w, &chi) {
                    continue;
                }
                let path = build_path(&rs, sat, w, &chi).map_err(|e| format!("{spec} {w} {}: {e}", sat.label()))?;
                let bad = verify_path(&rs, &path);
                ensure(bad.is_empty(), || format!("{spec} {w} {}: {bad:?}", sat.label()))?;
                paths += 1;
            }
        }
    }
    within(start, Duration::from_secs(300), "path suite")?;
    Ok(format!("{paths} paths, 0 violations"))
}

/// Cone count by bucketing a shifted grid by the chamber-generator form of
/// the semistability test.
fn brute_force_cone_count(rs: &RootSystem, g: &WeylGroup, density: i64) -> usize {
    let primes = [101, 103, 107, 109];
    let mut buckets: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut points = vec![Vec::<Rat>::new()];
    for (axis, prime) in primes.iter().take(rs.rank()).enumerate() {
        points = points
            .into_iter()
            .flat_map(|p| {
                (1..=density).map(move |k| {
                    let mut q = p.clone();
                    q.push(int(k) + Rat::new((axis as i64 + 1).into(), (*prime).into()));
                    q
                })
            })
            .collect();
    }
    for p in points {
        let chi = rs.from_fundamental(&QVector(p));
        let fp: Vec<usize> = (0..g.len())
            .filter(|&i| is_semistable_by_chamber(rs, &chi, g.get(i)))
            .collect();
        buckets.insert(fp);
    }
    buckets.len()
}

fn criterion_8() -> Check {
    let mut notes = Vec::new();
    for spec in ["A2", "B2", "G2", "A3"] {
        let (rs, g) = setup(spec);
        let fan = compute_fan(&rs, &g, false).map_err(|e| e.to_string())?;
        let report = validate_fan(&rs, &g, &fan, &ValidateOptions::default()).map_err(|e| e.to_string())?;
        ensure(report.passed(), || format!("{spec}: {:?}", report.violations.first()))?;
        ensure(report.samples_per_cone >= 100, || "too few samples".into())?;
        if rs.rank() == 2 {
            let oracle = brute_force_cone_count(&rs, &g, 50);
            ensure(oracle == fan.cones.len(), || {
                format!("{spec}: fan has {} cones, grid oracle {oracle}", fan.cones.len())
            })?;
        }
        notes.push(format!("{spec}: {}", fan.cones.len()));
    }
    Ok(format!("valid; cones {}", notes.join(", ")))
}

fn criterion_9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut rays = 0;
    for spec in ["B2", "B3"] {
        let (rs, g) = setup(spec);
        let chi = random_chi(&rs, &mut rng);
        let w0chi = g.longest().act(&chi);
        let cone = AffCone::new(w0chi, rs.positive_roots().to_vec());
        for _ in 0..200 {
            let a: QVector = (0..rs.rank()).map(|_| int(rng.gen_range(0..=30))).collect();
            if a.is_zero() {
                continue;
            }
            let d = -rs.from_fundamental(&a);
            let hit = cone.ray_hit_boundary(&QVector::zeros(rs.rank()), &d).map_err(|e| e.to_string())?;
            let RayHit::Boundary { point, .. } = hit else {
                return Err(format!("{spec}: unbounded ray along {d}"));
            };
            ensure(rs.weight_polytope_contains(&chi, &point), || format!("{spec}: {point} outside the polytope"))?;
            rays += 1;
        }
    }
    Ok(format!("{rays} rays, 0 violations"))
}

fn criterion_10() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let (rs, g) = setup("B2");
    let chi = random_chi(&rs, &mut rng);
    let mut samples = 0;
    while samples < 100 {
        let w = g.get(rng.gen_range(0..g.len()));
        let lambda = rs.from_fundamental(&(0..2).map(|_| int(rng.gen_range(0..=10))).collect());
        let wchi = w.act(&chi);
        let coeffs: Vec<Rat> = rs
            .positive_roots()
            .iter()
            .map(|_| Rat::new(rng.gen_range(0..=10).into(), rng.gen_range(1..=10).into()))
            .collect();
        let tau = rs
            .positive_roots()
            .iter()
            .zip(&coeffs)
            .fold(wchi.clone(), |acc, (a, c)| acc.add_scaled(c, a));
        if !rs.weight_polytope_contains(&chi, &tau) {
            continue;
        }
        debug_assert!(cone_member(&(&tau - &wchi), rs.positive_roots()).is_member());
        let lhs = rs.form(&wchi, &lambda);
        let rhs = rs.form(&tau, &lambda);
        ensure(lhs <= rhs, || format!("(w chi, lambda) = {lhs} > {rhs} at tau = {tau}"))?;
        samples += 1;
    }
    Ok(format!("{samples} samples, 0 violations"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("B4 Picard rank", criterion_1),
        ("general position Picard rank", criterion_2),
        ("A2 counterexample", criterion_3),
        ("fundamental weight norm table", criterion_4),
        ("unstable codimension on fan cones", criterion_5),
        ("positive cone LP equivalence", criterion_6),
        ("highest-root paths", criterion_7),
        ("fan validity and grid oracle", criterion_8),
        ("rays stay in the weight polytope", criterion_9),
        ("Seshadri minimality", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({:.2?})", i + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
