//! Verification suites: named checks over the library's enumerative and
//! homological claims, grouped by subject.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};

use morse_core::complex::SimplicialComplex;
use morse_core::graph_morse::{
    self, count_rooted_forests_by_size, kn_fvector, verification_corpus, Graph,
};
use morse_core::hasse::HasseDiagram;
use morse_core::homology::{reduced_homology_threaded, HomologyGroups};
use morse_core::morse::{
    count_matchings_by_size, count_perfect_morse_matchings, critical_faces,
    enumerate_matchings, find_single_critical_matching, MatchMode,
};
use morse_core::morse_complex::{
    circle_fvector_formula, discrete_morse_complex, pure_morse_complex,
};
use morse_core::simplex_enum::{
    bounds_report, compare_kalai_cgp, count_perfect_acyclic_matchings_cube,
    count_perfect_matchings_cube, direction_profile, extract_tk, is_kn_tree, kalai_sum,
    product_lower_bound, r_values, KTree, DEFAULT_MAX_CUBE_DIM, DEFAULT_SUBSET_BUDGET,
};
use morse_core::{Result, Simplex};

use crate::report::{check, BoundsRow, Check, RunReport};

/// The exact perfect-matching count of the 4-simplex, first computed here by
/// exhaustively filtering the 589185 perfect matchings of the 5-cube for
/// acyclicity, and kept as a regression constant.
pub const EXACT_F4: u64 = 380_125;

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Suite {
    Circle,
    Simplex,
    Graph,
    Kalai,
    Bounds,
    All,
}

pub fn run_suite(suite: Suite, threads: usize, max_faces: usize) -> Result<RunReport> {
    let started = Instant::now();
    let mut report = RunReport::new("verify");
    report.param("suite", format!("{suite:?}").to_lowercase());
    report.param("threads", threads);
    let mut checks = Vec::new();
    let mut counts: BTreeMap<String, String> = BTreeMap::new();
    match suite {
        Suite::Circle => circle_suite(&mut checks, threads, max_faces)?,
        Suite::Simplex => simplex_suite(&mut checks, &mut counts, threads, max_faces)?,
        Suite::Graph => graph_suite(&mut checks)?,
        Suite::Kalai => kalai_suite(&mut checks)?,
        Suite::Bounds => report.bounds = Some(bounds_suite(&mut checks, &mut counts)?),
        Suite::All => {
            circle_suite(&mut checks, threads, max_faces)?;
            simplex_suite(&mut checks, &mut counts, threads, max_faces)?;
            graph_suite(&mut checks)?;
            kalai_suite(&mut checks)?;
            report.bounds = Some(bounds_suite(&mut checks, &mut counts)?);
        }
    }
    if !counts.is_empty() {
        report.counts = Some(counts);
    }
    report.checks = checks;
    report.elapsed_ms = started.elapsed().as_millis();
    Ok(report)
}

/// Free part of a homology description as (degree, rank) pairs; everything
/// else must vanish and no torsion is allowed.
fn homology_is_free_with(h: &HomologyGroups, expected: &[(usize, u64)]) -> bool {
    let torsion_free = (0..=h.dim()).all(|k| h.torsion(k).is_empty());
    let ranks_match = (0..=h.dim()).all(|k| {
        let want: u64 = expected
            .iter()
            .filter(|(deg, _)| *deg == k)
            .map(|(_, r)| r)
            .sum();
        h.betti(k) == want
    });
    let in_range = expected.iter().all(|(deg, _)| *deg <= h.dim());
    torsion_free && ranks_match && in_range
}

/// The wedge-of-spheres homology of the Morse complex of the n-cycle.
fn kozlov_expected(n: u32) -> Vec<(usize, u64)> {
    let k = (n / 3) as usize;
    match n % 3 {
        0 => vec![(2 * k - 1, 2), (3 * k - 2, 2)],
        1 => vec![(2 * k, 1), (3 * k - 1, 2)],
        _ => vec![(2 * k, 1), (3 * k, 2)],
    }
}

fn circle_suite(checks: &mut Vec<Check>, threads: usize, max_faces: usize) -> Result<()> {
    for n in 3..=8u32 {
        let c = SimplicialComplex::cycle_graph(n)?;
        let full = discrete_morse_complex(&c, max_faces, threads)?;
        let pure = pure_morse_complex(&c, max_faces, threads)?;

        if n <= 7 {
            let formula = circle_fvector_formula(n)?;
            check(
                checks,
                format!("Morse complex f-vector of the {n}-cycle matches the closed form"),
                formula.fvector == full.f_vector(),
                format!("enumerated {} vs formula {}", full.f_vector(), formula.fvector),
            );
        }

        check(
            checks,
            format!("Morse complex of the {n}-cycle is pure iff n <= 5"),
            full.is_pure() == (n <= 5),
            format!("pure = {}", full.is_pure()),
        );
        check(
            checks,
            format!("pure Morse complex of the {n}-cycle has dimension n - 2 = {}", n - 2),
            pure.complex().dim() == (n - 2) as usize,
            format!("dim = {}", pure.complex().dim()),
        );

        let h_full = reduced_homology_threaded(full.complex(), threads)?;
        check(
            checks,
            format!("homology of the Morse complex of the {n}-cycle matches Kozlov's wedge"),
            homology_is_free_with(&h_full, &kozlov_expected(n)),
            format!("expected free ranks {:?}", kozlov_expected(n)),
        );

        if (4..=7).contains(&n) {
            let h_pure = reduced_homology_threaded(pure.complex(), threads)?;
            let expected = vec![(2usize, 1u64), ((n - 2) as usize, 2u64)];
            check(
                checks,
                format!(
                    "homology of the pure Morse complex of the {n}-cycle matches S^2 v S^{} v S^{}",
                    n - 2,
                    n - 2
                ),
                homology_is_free_with(&h_pure, &expected),
                format!("expected free ranks {expected:?}"),
            );
        }
    }

    for e in 2..=6u32 {
        let p = SimplicialComplex::path_graph(e)?;
        let mp = pure_morse_complex(&p, max_faces, threads)?;
        let hd = HasseDiagram::new(mp.complex());
        let cert = find_single_critical_matching(&hd, 1 << 22)?;
        let ok = match &cert {
            Some(m) => critical_faces(&hd, m).len() == 1,
            None => false,
        };
        check(
            checks,
            format!("pure Morse complex of the {e}-edge path is collapsible"),
            ok,
            format!(
                "{} faces, certificate pairs: {}",
                mp.complex().face_count(),
                cert.map(|m| m.len()).unwrap_or(0)
            ),
        );
    }

    let boundary = SimplicialComplex::cycle_graph(3)?;
    let hd = HasseDiagram::new(&boundary);
    check(
        checks,
        "boundary of the 2-simplex admits no single-critical matching".to_string(),
        find_single_critical_matching(&hd, 1 << 22)?.is_none(),
        String::new(),
    );
    Ok(())
}

fn simplex_suite(
    checks: &mut Vec<Check>,
    counts: &mut BTreeMap<String, String>,
    threads: usize,
    max_faces: usize,
) -> Result<()> {
    // perfect Morse matching counts through the Hasse route
    for (n, expected) in [(1usize, 2u64), (2, 9), (3, 256)] {
        let h = HasseDiagram::new(&SimplicialComplex::simplex(n));
        let got = count_perfect_morse_matchings(&h, threads);
        counts.insert(format!("f({n})"), got.to_string());
        check(
            checks,
            format!("f({n}) = {expected}"),
            got == BigUint::from(expected),
            format!("counted {got}"),
        );
    }

    // the cube route must agree and classify the rejects
    let cube4 = count_perfect_acyclic_matchings_cube(4, DEFAULT_MAX_CUBE_DIM)?;
    check(
        checks,
        "4-cube filter: 272 perfect matchings, 16 cyclic, 256 acyclic".to_string(),
        cube4.total == BigUint::from(272u32)
            && cube4.rejected_cyclic == BigUint::from(16u32)
            && cube4.acyclic == BigUint::from(256u32),
        format!(
            "total {}, rejected {}, acyclic {}",
            cube4.total, cube4.rejected_cyclic, cube4.acyclic
        ),
    );

    for (d, expected) in [(4u32, 272u64), (5, 589_185)] {
        let got = count_perfect_matchings_cube(d, DEFAULT_MAX_CUBE_DIM)?;
        counts.insert(format!("p({d})"), got.to_string());
        check(
            checks,
            format!("p({d}) = {expected}"),
            got == BigUint::from(expected),
            format!("counted {got}"),
        );
    }

    // Morse complexes of the 3-simplex
    let d3 = SimplicialComplex::simplex(3);
    let full = discrete_morse_complex(&d3, max_faces, threads)?;
    let pure = pure_morse_complex(&d3, max_faces, threads)?;
    check(
        checks,
        "Morse complex f-vector of the 3-simplex = (28,300,1544,3932,4632,2128,256)".to_string(),
        full.f_vector().counts() == [28, 300, 1544, 3932, 4632, 2128, 256],
        format!("got {}", full.f_vector()),
    );
    check(
        checks,
        "pure Morse complex f-vector of the 3-simplex = (28,300,1544,3680,3672,1600,256)"
            .to_string(),
        pure.f_vector().counts() == [28, 300, 1544, 3680, 3672, 1600, 256],
        format!("got {}", pure.f_vector()),
    );
    check(
        checks,
        "Morse complex of the 3-simplex is not pure".to_string(),
        !full.is_pure(),
        String::new(),
    );

    let h_full = reduced_homology_threaded(full.complex(), threads)?;
    check(
        checks,
        "Morse complex homology of the 3-simplex is Z^99 in degree 4 only".to_string(),
        homology_is_free_with(&h_full, &[(4, 99)]),
        format!("betti = {:?}", h_full.betti_numbers()),
    );
    let h_pure = reduced_homology_threaded(pure.complex(), threads)?;
    check(
        checks,
        "pure Morse complex homology of the 3-simplex is Z^81 in degree 3 only".to_string(),
        homology_is_free_with(&h_pure, &[(3, 81)]),
        format!("betti = {:?}", h_pure.betti_numbers()),
    );

    // small simplices
    let m1 = discrete_morse_complex(&SimplicialComplex::simplex(1), max_faces, threads)?;
    let h1 = reduced_homology_threaded(m1.complex(), threads)?;
    check(
        checks,
        "Morse complex of the 1-simplex is a 0-sphere".to_string(),
        m1.f_vector().counts() == [2] && homology_is_free_with(&h1, &[(0, 1)]),
        format!("f = {}", m1.f_vector()),
    );
    let m2 = discrete_morse_complex(&SimplicialComplex::simplex(2), max_faces, threads)?;
    let h2 = reduced_homology_threaded(m2.complex(), threads)?;
    check(
        checks,
        "Morse complex homology of the 2-simplex is Z^4 in degree 1 only".to_string(),
        homology_is_free_with(&h2, &[(1, 4)]),
        format!("betti = {:?}", h2.betti_numbers()),
    );
    Ok(())
}

fn graph_suite(checks: &mut Vec<Check>) -> Result<()> {
    for (name, g) in verification_corpus() {
        let identity = graph_morse::verify_laplacian_identity(&g)?;
        check(
            checks,
            format!("Laplacian characteristic polynomial identity on {name}"),
            identity.holds,
            format!("sigma = {}", identity.laplacian_side),
        );
    }

    for n in 2..=5u32 {
        let counts = count_rooted_forests_by_size(&Graph::complete(n));
        check(
            checks,
            format!("complete-graph f-vector formula matches enumeration at n = {n}"),
            kn_fvector(n).counts() == &counts[1..],
            format!("enumerated {:?}", &counts[1..]),
        );
    }

    for (name, g) in verification_corpus() {
        let h = HasseDiagram::new(&g.as_complex());
        let matching_counts = count_matchings_by_size(&h);
        let forest_counts = count_rooted_forests_by_size(&g);
        let padded: Vec<u64> = {
            let mut v = matching_counts.clone();
            v.resize(forest_counts.len().max(v.len()), 0);
            v
        };
        let mut forests = forest_counts.clone();
        forests.resize(padded.len(), 0);
        check(
            checks,
            format!("matchings of {name} biject with rooted forests, size by size"),
            padded == forests,
            format!("{matching_counts:?}"),
        );
    }

    for (name, g) in verification_corpus() {
        let t = graph_morse::spanning_tree_count(&g);
        let rooted = count_rooted_forests_by_size(&g)[g.node_count() as usize - 1];
        check(
            checks,
            format!("matrix-tree count of {name}: rooted spanning trees = n * cofactor"),
            BigInt::from(rooted) == t.clone() * BigInt::from(g.node_count()),
            format!("{rooted} = {} * {t}", g.node_count()),
        );
    }

    // round trips on the square
    let g = Graph::cycle(4);
    let h = HasseDiagram::new(&g.as_complex());
    let mut ok = true;
    for m in enumerate_matchings(&h, MatchMode::All) {
        let f = graph_morse::matching_to_rooted_forest(&g, &h, &m)?;
        ok &= graph_morse::rooted_forest_to_matching(&g, &h, &f)? == m;
    }
    check(
        checks,
        "matching <-> rooted forest round-trips on the 4-cycle".to_string(),
        ok,
        String::new(),
    );
    Ok(())
}

fn kalai_suite(checks: &mut Vec<Check>) -> Result<()> {
    for (n, k, expected) in [(3u32, 1usize, 3u64), (4, 1, 16), (4, 2, 4), (5, 2, 125)] {
        let s = kalai_sum(n, k, DEFAULT_SUBSET_BUDGET)?;
        check(
            checks,
            format!("tree-sum identity at (n, k) = ({n}, {k}): sum = {expected}"),
            s.matches() && s.sum == BigInt::from(expected),
            format!("sum {}, {} trees", s.sum, s.tree_count),
        );
    }

    let h = HasseDiagram::new(&SimplicialComplex::simplex(3));
    let perfect = enumerate_matchings(&h, MatchMode::Perfect);
    let mut all_trees = true;
    let mut tuples = std::collections::HashSet::new();
    for m in &perfect {
        let mut tuple = Vec::new();
        for k in (0..=3usize).rev() {
            let t = extract_tk(&h, m, k)?;
            all_trees &= is_kn_tree(&t)?.is_tree();
            tuple.push(t.faces);
        }
        tuples.insert(tuple);
    }
    check(
        checks,
        "every T_k of all 256 perfect matchings of the 3-simplex is a (k,4)-tree".to_string(),
        all_trees && perfect.len() == 256,
        format!("{} matchings", perfect.len()),
    );
    check(
        checks,
        "the tuple (T_3,...,T_0) determines the matching (injectivity)".to_string(),
        tuples.len() == 256,
        format!("{} distinct tuples", tuples.len()),
    );

    // the classical torsion witness: the 6-vertex projective plane is a
    // (2,6)-tree of torsion order 2
    let rp2: Vec<Simplex> = [
        [0u32, 1, 2],
        [0, 1, 3],
        [0, 2, 4],
        [0, 3, 5],
        [0, 4, 5],
        [1, 2, 5],
        [1, 3, 4],
        [1, 4, 5],
        [2, 3, 4],
        [2, 3, 5],
    ]
    .iter()
    .map(|f| Simplex::new(f.to_vec()).expect("valid triangle"))
    .collect();
    let t = KTree {
        k: 2,
        n: 6,
        faces: rp2,
    };
    let result = is_kn_tree(&t)?;
    check(
        checks,
        "the 6-vertex projective plane is a (2,6)-tree with torsion order 2".to_string(),
        result.is_tree() && result.torsion_below == Some(BigInt::from(2)),
        format!("torsion order {:?}", result.torsion_below),
    );
    Ok(())
}

fn bounds_suite(
    checks: &mut Vec<Check>,
    counts: &mut BTreeMap<String, String>,
) -> Result<Vec<BoundsRow>> {
    let r = r_values(9);
    check(
        checks,
        "r(4) = 216".to_string(),
        r[3] == BigInt::from(216),
        format!("r(4) = {}", r[3]),
    );
    check(
        checks,
        "r(5) = 174960".to_string(),
        r[4] == BigInt::from(174_960),
        format!("r(5) = {}", r[4]),
    );

    for n in 2..=8u32 {
        let product = product_lower_bound(n);
        let r_next = &r[n as usize];
        check(
            checks,
            format!("product lower bound < r({}) at n = {n}", n + 1),
            product < *r_next,
            format!("{product} < {r_next}"),
        );
    }

    for n in 1..=20u32 {
        let cmp = compare_kalai_cgp(n);
        check(
            checks,
            format!("tree-identity upper bound strictly below the cube-matching bound at n = {n}"),
            cmp == Ordering::Less,
            match cmp {
                Ordering::Less => "strictly below".to_string(),
                Ordering::Equal => "the bounds coincide (both equal 2)".to_string(),
                Ordering::Greater => "strictly above".to_string(),
            },
        );
    }

    // exact counts and the bracket
    let mut rows = Vec::new();
    for n in 1..=8u32 {
        let report = bounds_report(n, DEFAULT_MAX_CUBE_DIM)?;
        if let Some(f) = &report.computed_f {
            counts.insert(format!("f({n})"), f.to_string());
        }
        check(
            checks,
            format!("bound bracket holds at n = {n}"),
            report.bracket_holds(),
            format!(
                "{} < {} <= {} <= {}",
                report.lower_product,
                report.lower_r,
                report
                    .computed_f
                    .as_ref()
                    .map(|f| f.to_string())
                    .unwrap_or_else(|| "?".to_string()),
                report.upper_kalai
            ),
        );
        let (lo, hi) = report.upper_cgp.log10_interval();
        rows.push(BoundsRow {
            n,
            lower_product: report.lower_product.to_string(),
            lower_r: report.lower_r.to_string(),
            exact_count: report.computed_f.as_ref().map(|f| f.to_string()),
            upper_tree_identity: report.upper_kalai.to_string(),
            upper_cube_matching: format!(
                "({}!)^({}) ~ 10^[{lo:.6}, {hi:.6}]",
                report.upper_cgp.factorial_of, report.upper_cgp.exponent
            ),
            comparison: match report.dominance {
                Ordering::Less => "<".to_string(),
                Ordering::Equal => "=".to_string(),
                Ordering::Greater => ">".to_string(),
            },
        });
    }

    check(
        checks,
        format!("f(4) = {EXACT_F4} (regression value inside the bracket [174960, 390625])"),
        counts.get("f(4)").map(|s| s.as_str()) == Some("380125"),
        format!("f(4) = {}", counts.get("f(4)").cloned().unwrap_or_default()),
    );

    // the recursion's intermediate quantity, reported without assertion:
    // perfect acyclic matchings using edges of all but (at least) one
    // direction
    for d in 3..=4u32 {
        let profile = direction_profile(d, DEFAULT_MAX_CUBE_DIM)?;
        let all_but_one: u64 = profile[..d as usize].iter().sum();
        counts.insert(
            format!("cube({d}) acyclic matchings missing a direction"),
            all_but_one.to_string(),
        );
        counts.insert(format!("cube({d}) direction profile"), format!("{profile:?}"));
    }
    let profile4 = direction_profile(4, DEFAULT_MAX_CUBE_DIM)?;
    check(
        checks,
        "the 4-cube has a perfect acyclic matching using all four directions".to_string(),
        profile4[4] > 0,
        format!("{} such matchings", profile4[4]),
    );

    counts.insert(
        "p(6), literature value (not recomputed)".to_string(),
        "16332454526976".to_string(),
    );
    Ok(rows)
}
