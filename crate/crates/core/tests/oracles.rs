//! Cross-checks against independent formulations.

use eulerforge_core::algebra::{rat, ExactScalar, Var};
use eulerforge_core::cfrac::{deleham, hankel_determinants, jfrac_to_series, series_to_jfrac};
use eulerforge_core::gallery::*;
use eulerforge_core::riordan::{RiordanArray, RiordanKind};
use eulerforge_core::series::{exp_linear, PowerSeries, SeriesVar};
use eulerforge_core::transforms::{inverse_sumudu, sumudu};
use eulerforge_core::triangle::{
    production_from_triangle, triangle_from_gf, triangle_from_production, type_a_production, Triangle,
};

fn sc(text: &str) -> ExactScalar {
    text.parse().unwrap()
}

fn ints(v: &[i64]) -> Vec<ExactScalar> {
    v.iter().map(|&n| ExactScalar::int(n)).collect()
}

fn leibniz(m: &[Vec<ExactScalar>]) -> ExactScalar {
    fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
        if n == 0 {
            return vec![(vec![], false)];
        }
        let mut out = Vec::new();
        for (p, odd) in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                // moving n-1 from the end to `pos` takes (n-1-pos) transpositions
                out.push((q, odd ^ ((n - 1 - pos) % 2 == 1)));
            }
        }
        out
    }
    let mut total = ExactScalar::zero();
    for (p, odd) in permutations(m.len()) {
        let mut term = ExactScalar::one();
        for (i, &j) in p.iter().enumerate() {
            term = &term * &m[i][j];
        }
        total = if odd { &total - &term } else { &total + &term };
    }
    total
}

#[test]
fn hankel_matches_leibniz_and_product_formula() {
    let j = type_b_jfraction(&sc("a"), &sc("b"), 4);
    let s = jfrac_to_series(&j, 6).unwrap();
    let h = hankel_determinants(&s, 3).unwrap();
    let m = s.coeffs();
    for (n, hn) in h.iter().enumerate() {
        let matrix: Vec<Vec<_>> = (0..=n).map(|i| (0..=n).map(|k| m[i + k].clone()).collect()).collect();
        assert_eq!(*hn, leibniz(&matrix), "H_{n}");
        let mut product = ExactScalar::one();
        for k in 1..=n {
            product = &product * &j.lambda[k - 1].pow((n + 1 - k) as u32);
        }
        assert_eq!(*hn, product, "H_{n} product form");
    }
}

#[test]
fn reversion_matches_lagrange_inversion() {
    let f = PowerSeries::new(SeriesVar::X, vec![sc("0"), sc("1"), sc("y"), sc("2"), sc("y^2-1"), sc("3")]);
    let g = f.reversion().unwrap();
    let phi = f.shift_down().unwrap().reciprocal().unwrap();
    for n in 1..=5usize {
        let power = phi.pow(n as u32);
        let expected = power.coeffs()[n - 1].scale(&eulerforge_core::Rational::new(1.into(), (n as i64).into()));
        assert_eq!(g.coeffs()[n], expected, "coefficient {n}");
    }
}

#[test]
fn type_a_four_routes_agree() {
    let depth = 7;
    let pipeline = type_a_generalized(depth).unwrap();
    let jf = triangle_from_gf(&jfrac_to_series(&type_a_jfraction(4), 6).unwrap(), Var::Y, depth).unwrap();
    let (rs, ss) = type_a_deleham_sequences(9);
    let del = deleham(&rs, &ss, depth).unwrap();
    let moments = type_a_moment_array(6).unwrap().to_triangle(depth).unwrap().column(0);
    let riordan = triangle_from_gf(&PowerSeries::new(SeriesVar::X, moments), Var::Y, depth).unwrap();
    let recurrence = type_a_recurrence(depth).moments(depth).unwrap();
    let rec = triangle_from_gf(&PowerSeries::new(SeriesVar::X, recurrence), Var::Y, depth).unwrap();
    assert_eq!(pipeline, jf);
    assert_eq!(pipeline, del);
    assert_eq!(pipeline, riordan);
    assert_eq!(pipeline, rec);
    assert_eq!(&pipeline, fixture("typeA_generalized").unwrap().triangle());
}

#[test]
fn type_a_row_sums_and_fubini() {
    let t = type_a_generalized(7).unwrap();
    assert_eq!(t.row_sums(), ints(&[1, 2, 8, 48, 384, 3840, 46080]));
    assert_eq!(t.column(0), ints(&[1, 1, 3, 13, 75, 541, 4683]));
}

#[test]
fn type_a_moment_array_az_and_inverse() {
    let arr = type_a_moment_array(9).unwrap();
    let az = arr.az_sequences().unwrap();
    let a = PowerSeries::new(SeriesVar::T, vec![sc("1"), sc("y+3"), sc("2*y+2")]);
    let z = PowerSeries::new(SeriesVar::T, vec![sc("y+1"), sc("2*y+2")]);
    assert!(az.a.agrees_to(&a.truncate(2), 2) && az.a.coeffs()[3..].iter().all(ExactScalar::is_zero));
    assert!(az.z.agrees_to(&z, 1) && az.z.coeffs()[2..].iter().all(ExactScalar::is_zero));

    let stated = type_a_orthogonal_array(9).unwrap();
    let product = arr.multiply(&stated).unwrap();
    assert_eq!(product.to_triangle(8).unwrap(), Triangle::identity(8));
    assert_eq!(arr.inverse().unwrap().to_triangle(8).unwrap(), stated.to_triangle(8).unwrap());
}

#[test]
fn printed_f_reads_with_ty_in_the_denominator() {
    // (e^t - e^{ty}) / (2 e^{ty} - e^t (y+1))
    let order = 7;
    let et = exp_linear(SeriesVar::T, ExactScalar::one(), order);
    let ety = exp_linear(SeriesVar::T, sc("y"), order);
    let num = et.sub(&ety).unwrap();
    let den = ety.scale(&ExactScalar::int(2)).sub(&et.scale(&sc("y+1"))).unwrap();
    let f = num.div(&den).unwrap();
    let arr = type_a_moment_array(order).unwrap();
    assert!(f.agrees_to(arr.f(), order));
}

#[test]
fn type_a_production_is_tridiagonal() {
    let p = type_a_moment_array(9).unwrap().production_matrix(7).unwrap();
    assert!(p.is_tridiagonal());
    let j = type_a_jfraction(7);
    assert_eq!(p.diagonal(), j.b);
    assert_eq!(p.subdiagonal(), j.lambda);
    assert!(p.superdiagonal().iter().all(ExactScalar::is_one));
}

#[test]
fn row_symmetry_only_at_zero_and_two() {
    for a in -3..=5 {
        let m = triangle_from_production(&type_a_production(&ExactScalar::int(a), 7).unwrap(), 7).unwrap();
        let inv = m.invert().unwrap();
        assert_eq!(inv.is_centrally_symmetric_up_to_sign(), a == 0 || a == 2, "a = {a}");
        assert_eq!(inv.is_centrally_symmetric(), a == 2, "a = {a}");
    }
}

#[test]
fn a_zero_matches_riordan_array() {
    let m = triangle_from_production(&type_a_production(&ExactScalar::int(0), 7).unwrap(), 7).unwrap();
    let g = PowerSeries::from_ints(SeriesVar::X, &[1, -1, -1, -1, -1, -1, -1]);
    let f = PowerSeries::from_ints(SeriesVar::X, &[0, -1, -1, -1, -1, -1, -1]);
    let r = RiordanArray::ordinary(g, f).unwrap();
    assert_eq!(m.invert().unwrap(), r.to_triangle(7).unwrap());
    let gf = triangle_from_gf(&type_a_ogf(6).unwrap(), Var::Y, 7).unwrap();
    assert_eq!(gf, r.to_triangle(7).unwrap());
}

#[test]
fn t_transformed_type_a() {
    let t = type_a_t_transformed(7).unwrap();
    assert_eq!(&t, fixture("A114608").unwrap().triangle());
    let jf = jfrac_to_series(
        &eulerforge_core::cfrac::t_transform(&type_a_jfraction(5)).unwrap(),
        8,
    )
    .unwrap();
    assert_eq!(jf, type_a_catalan_form(8).unwrap());
    let (rs, ss): (Vec<_>, Vec<_>) = (0..8).map(|i| (rat(1 + (i % 2)), rat(1 - (i % 2)))).unzip();
    assert_eq!(deleham(&rs, &ss, 7).unwrap(), t);

    let pair = moment_riordan_pair(&MomentFamily::TypeAFinal, 9).unwrap();
    let moments = pair.inverse().unwrap();
    assert!(moments.production_matrix(7).unwrap().is_tridiagonal());
    let first = moments.to_triangle(9).unwrap().column(0);
    assert_eq!(first, type_a_catalan_form(8).unwrap().into_coeffs());
}

#[test]
fn type_b_routes_agree() {
    let (a, b) = (sc("a"), sc("b"));
    assert_eq!(
        type_b_generalized(&a, &b, 6).unwrap(),
        type_b_generalized_by_production(&a, &b, 6).unwrap()
    );
    let rec = type_b_recurrence(&a, &b, 5);
    let moments = type_b_moment_series(&a, &b, 4).unwrap().into_coeffs();
    assert_eq!(rec.moments(5).unwrap(), moments);
}

#[test]
fn type_b_inverse_and_gf() {
    let (a, b) = (sc("a"), sc("b"));
    let inv = type_b_inverse_triangle(&a, &b, 6).unwrap();
    let gf = triangle_from_gf(&type_b_inverse_gf(&a, &b, 5).unwrap(), Var::R, 6).unwrap();
    assert_eq!(inv, gf);
    assert_eq!(
        type_b_inverse_gf(&sc("3"), &sc("4"), 7).unwrap(),
        ogf(OgfName::TB, 7).unwrap()
    );
}

#[test]
fn type_b_moment_array_az() {
    let (a, b) = (sc("a"), sc("b"));
    let arr = type_b_moment_array(&a, &b, 6).unwrap();
    let az = arr.az_sequences().unwrap();
    let mu = type_b_mu(&a, &b);
    assert_eq!(az.z.coeffs()[..2], [sc("r+1"), mu.clone()]);
    assert_eq!(az.a.coeffs()[..3], [sc("1"), sc("2*r+2"), mu]);
    assert!(az.a.coeffs()[3..].iter().all(ExactScalar::is_zero));
    assert!(az.z.coeffs()[2..].iter().all(ExactScalar::is_zero));
    assert!(arr.production_matrix(5).unwrap().is_tridiagonal());
}

#[test]
fn catalan_side_via_t_transform() {
    for (a, b) in [(0, 0), (0, 1), (1, 1), (1, 2), (3, 4)] {
        let (a, b) = (ExactScalar::int(a), ExactScalar::int(b));
        assert_eq!(type_b_catalan(&a, &b, 7).unwrap(), type_b_catalan_via_t(&a, &b, 7).unwrap());
    }
    let pair = moment_riordan_pair(&MomentFamily::TypeBFinal { a: sc("3"), b: sc("4") }, 6).unwrap();
    let first = pair.inverse().unwrap().to_triangle(6).unwrap().column(0);
    let at_one: Vec<_> = first.iter().map(|c| c.substitute_rational(Var::R, &rat(1)).unwrap()).collect();
    assert_eq!(at_one, ints(&[1, 2, 8, 40, 224, 1344]));
}

#[test]
fn corrected_g_reproduces_eb_and_printed_form_does_not_normalize() {
    let s = sc("1-r");
    let g = corrected_g(&sc("3"), &sc("4"), &s, 7).unwrap();
    assert_eq!(g, egf(EgfName::EB, 7).unwrap());
    assert_eq!(
        triangle_from_gf(&sumudu(&g).unwrap(), Var::R, 7).unwrap(),
        type_b_generalized(&sc("3"), &sc("4"), 7).unwrap()
    );

    // perfect square at (1,1) as well: discriminant r^2
    let g11 = corrected_g(&sc("1"), &sc("1"), &sc("r"), 6).unwrap();
    assert_eq!(
        triangle_from_gf(&sumudu(&g11).unwrap(), Var::R, 7).unwrap(),
        *fixture("typeB_factorial_1_1").unwrap().triangle()
    );

    // the printed closed form has denominator r+1+s-2(r+1-s) at t = 0
    let printed_m0 = (&s.scale(&rat(2)))
        .checked_div(&(sc("r+1") + s.clone() - (sc("r+1") - s.clone()).scale(&rat(2))))
        .unwrap();
    assert!(!printed_m0.is_one());
}

#[test]
fn pipelines_reproduce_ogfs() {
    for name in EgfName::ALL {
        let t = pipeline_triangle(name, 7).unwrap();
        assert_eq!(t, ogf_triangle(name.partner(), 7).unwrap(), "{name:?}");
    }
    let e = egf(EgfName::E3, 6).unwrap();
    assert_eq!(inverse_sumudu(&sumudu(&e).unwrap()).unwrap(), e);
}

#[test]
fn t3_closed_form_and_inverse_production() {
    let t3 = fixture("T3").unwrap().triangle();
    for n in 0..7 {
        for k in 0..=n {
            assert_eq!(t3_term(n as i64, k as i64).unwrap(), t3.get(n, k));
        }
    }
    let p = production_from_triangle(&pipeline_triangle(EgfName::E3, 8).unwrap().invert().unwrap()).unwrap();
    assert_eq!(p, type_a_production(&ExactScalar::int(2), 7).unwrap());
}

#[test]
fn symbolic_jfraction_recovery() {
    let j = type_b_jfraction(&sc("a"), &sc("b"), 3);
    let s = jfrac_to_series(&j, 5).unwrap();
    assert_eq!(series_to_jfrac(&s, 2).unwrap(), j);
}

#[test]
fn riordan_identity_exponential() {
    let id = RiordanArray::identity(RiordanKind::Exponential, SeriesVar::T, 6);
    let arr = type_a_moment_array(6).unwrap();
    assert_eq!(arr.multiply(&id).unwrap().to_triangle(7).unwrap(), arr.to_triangle(7).unwrap());
}
