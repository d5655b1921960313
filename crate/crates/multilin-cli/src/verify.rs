//! Seeded property suites behind `multilin verify`.
//!
//! Every suite draws its instances from a deterministic generator, so a
//! fixed seed always produces the same report bytes. Checks compare the
//! library against independent routes: written-out entry grids for the
//! small fixtures, cofactor determinants for compound matrices,
//! substitution for composition, and permutation-sum definitions for
//! the multilinear products.

use multilin::alt::{alt_column_entries, alt_column_vector, gl_action_antisym, multi_wedge};
use multilin::multiindex::{self, multinomial, MultiIndex, StrictIndex};
use multilin::polymap::{exp_point, gl_action_homogeneous};
use multilin::rational::binomial;
use multilin::shuffle::{block_shuffles, shuffle_decompose, shuffle_decompose_mirror, shuffles};
use multilin::sym::{column_entries, column_vector, row_covector};
use multilin::{
    multilinear, norm, AltMatrix, AltMultiMap, BilinearMap, DenseMatrix, PolyMap, Rational,
    SymMatrix, SymMultiMap, Tensor,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type VerifyRng = ChaCha8Rng;

/// Outcome of one suite: how many of its checks held.
#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
}

impl SuiteResult {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

/// Runs every suite on one generator stream.
pub fn run_all(seed: u64) -> Vec<SuiteResult> {
    let mut rng = VerifyRng::seed_from_u64(seed);
    vec![
        suite_multiindex_order(&mut rng),
        suite_shuffle_bijections(),
        suite_odot_example_grid(&mut rng),
        suite_gl_action_grid(&mut rng),
        suite_wedge_examples(&mut rng),
        suite_odot_algebra_laws(&mut rng),
        suite_wedge_algebra_laws(&mut rng),
        suite_sym_power_laws(&mut rng),
        suite_compound_laws(&mut rng),
        suite_composition_oracle(&mut rng),
        suite_change_of_variables(&mut rng),
        suite_multilinear_products(&mut rng),
        suite_norm_bounds(&mut rng),
        suite_json_roundtrip(&mut rng),
    ]
}

/// The deterministic report for a seed.
pub fn render_report(seed: u64, results: &[SuiteResult]) -> String {
    let mut out = format!("seed: {seed}\n");
    let mut passed = 0;
    let mut total = 0;
    for r in results {
        out.push_str(&format!("{}: {}/{}\n", r.name, r.passed, r.total));
        passed += r.passed;
        total += r.total;
    }
    out.push_str(&format!("total: {passed}/{total}\n"));
    out.push_str(if passed == total {
        "status: ok\n"
    } else {
        "status: FAILED\n"
    });
    out
}

// --- generators ---

fn rq(rng: &mut VerifyRng) -> Rational {
    Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=4)).expect("nonzero denominator")
}

fn rvec(rng: &mut VerifyRng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| rq(rng)).collect()
}

fn rdense(rng: &mut VerifyRng, rows: usize, cols: usize) -> DenseMatrix {
    DenseMatrix::from_entries(rows, cols, rvec(rng, rows * cols)).expect("shape matches")
}

fn rsym(rng: &mut VerifyRng, n: usize, n_prime: usize, p: usize, p_prime: usize) -> SymMatrix {
    let rows = multiindex::stratum_size(n, p);
    let cols = multiindex::stratum_size(n_prime, p_prime);
    SymMatrix::from_dense(n, n_prime, p, p_prime, &rdense(rng, rows, cols)).expect("shape matches")
}

fn ralt(rng: &mut VerifyRng, n: usize, n_prime: usize, p: usize, p_prime: usize) -> AltMatrix {
    let rows = multiindex::strict_stratum_size(n, p);
    let cols = multiindex::strict_stratum_size(n_prime, p_prime);
    AltMatrix::from_dense(n, n_prime, p, p_prime, &rdense(rng, rows, cols)).expect("shape matches")
}

fn rsym_nonzero(
    rng: &mut VerifyRng,
    n: usize,
    n_prime: usize,
    p: usize,
    p_prime: usize,
) -> SymMatrix {
    loop {
        let m = rsym(rng, n, n_prime, p, p_prime);
        if !m.is_zero() {
            return m;
        }
    }
}

fn rinvertible(rng: &mut VerifyRng, n: usize) -> DenseMatrix {
    loop {
        let m = rdense(rng, n, n);
        if !m.det().expect("square").is_zero() {
            return m;
        }
    }
}

fn rupper_matrix(rng: &mut VerifyRng, n: usize) -> DenseMatrix {
    let mut entries = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            entries.push(if r <= c { rq(rng) } else { Rational::zero() });
        }
    }
    DenseMatrix::from_entries(n, n, entries).expect("shape matches")
}

fn rrank_exact(rng: &mut VerifyRng, n: usize, l: usize) -> DenseMatrix {
    loop {
        let left = rdense(rng, n, l);
        let right = rdense(rng, l, n);
        let m = left.matmul(&right).expect("inner dims agree");
        if m.rank() == l {
            return m;
        }
    }
}

fn rpolymap(rng: &mut VerifyRng, n_in: usize, n_out: usize, degree: usize) -> PolyMap {
    let blocks = (0..=degree).map(|d| rsym(rng, n_out, n_in, 1, d)).collect();
    PolyMap::from_blocks(n_in, n_out, blocks).expect("blocks well formed")
}

fn sym11(m: &DenseMatrix) -> SymMatrix {
    SymMatrix::from_dense(m.rows(), m.cols(), 1, 1, m).expect("weight-(1,1) view")
}

fn alt11(m: &DenseMatrix) -> AltMatrix {
    AltMatrix::from_dense(m.rows(), m.cols(), 1, 1, m).expect("weight-(1,1) view")
}

// --- suite: multi-index order and binomials ---

pub fn suite_multiindex_order(rng: &mut VerifyRng) -> SuiteResult {
    let mut passed = 0;
    let mut total = 0;

    for _ in 0..120 {
        total += 1;
        let dim = rng.gen_range(1..=4);
        let a = MultiIndex::new((0..dim).map(|_| rng.gen_range(0..4)).collect());
        let b = MultiIndex::new((0..dim).map(|_| rng.gen_range(0..4)).collect());
        let c = MultiIndex::new((0..dim).map(|_| rng.gen_range(0..3)).collect());
        let ab = a.cmp_graded(&b).expect("same dim");
        let ba = b.cmp_graded(&a).expect("same dim");
        let shifted = a
            .add(&c)
            .expect("same dim")
            .cmp_graded(&b.add(&c).expect("same dim"))
            .expect("same dim");
        let ok =
            ab == ba.reverse() && (ab == std::cmp::Ordering::Equal) == (a == b) && ab == shifted;
        passed += ok as usize;
    }

    // Binomial sums over a lower stratum collapse to scalar binomials.
    for _ in 0..40 {
        total += 1;
        let dim = rng.gen_range(1..=3);
        let a = MultiIndex::new((0..dim).map(|_| rng.gen_range(0..4)).collect());
        let weight = a.weight();
        let ok = (0..=weight).all(|p| {
            let sum: Rational = multiindex::stratum(dim, p)
                .iter()
                .map(|b| multiindex::multi_binomial(&a, b))
                .sum();
            sum == Rational::from(binomial(weight, p) as i64)
        });
        passed += ok as usize;
    }

    SuiteResult {
        name: "multi-index-order",
        passed,
        total,
    }
}

// --- suite: shuffle decomposition bijections ---

pub fn suite_shuffle_bijections() -> SuiteResult {
    let mut passed = 0;
    let mut total = 0;
    for p in 0..=3usize {
        for q in 0..=3usize {
            for r in 0..=3usize {
                total += 1;
                passed += check_decomposition(p, q, r) as usize;
            }
        }
    }
    SuiteResult {
        name: "shuffle-bijections",
        passed,
        total,
    }
}

fn check_decomposition(p: usize, q: usize, r: usize) -> bool {
    let all = block_shuffles(&[p, q, r]);
    let outer_front = block_shuffles(&[p, q + r]).len();
    let inner_front = block_shuffles(&[q, r]).len();
    if outer_front * inner_front != all.len() {
        return false;
    }
    let mut seen_front = std::collections::BTreeSet::new();
    let mut seen_back = std::collections::BTreeSet::new();
    for s0 in &all {
        let Ok((sigma, tau)) = shuffle_decompose(s0, p, q, r) else {
            return false;
        };
        let front_ok = sigma.is_block_shuffle(&[p, q + r])
            && tau.images()[..p].iter().enumerate().all(|(i, &v)| i == v)
            && tau.is_block_shuffle(&[p, q, r])
            && &sigma.compose(&tau).expect("same length") == s0
            && sigma.sign() * tau.sign() == s0.sign()
            && seen_front.insert((sigma.images().to_vec(), tau.images().to_vec()));
        let Ok((sigma, tau)) = shuffle_decompose_mirror(s0, p, q, r) else {
            return false;
        };
        let back_ok = sigma.is_block_shuffle(&[p + q, r])
            && tau.images()[p + q..]
                .iter()
                .enumerate()
                .all(|(i, &v)| p + q + i == v)
            && tau.is_block_shuffle(&[p, q, r])
            && &sigma.compose(&tau).expect("same length") == s0
            && sigma.sign() * tau.sign() == s0.sign()
            && seen_back.insert((sigma.images().to_vec(), tau.images().to_vec()));
        if !front_ok || !back_ok {
            return false;
        }
    }
    true
}

// --- suite: the written-out product grid for ordinary 2x2 factors ---

/// The nine entries of the ⊙ product of ordinary 2x2 matrices, written
/// out explicitly.
fn odot_grid_2x2(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    let e = |m: &DenseMatrix, r: usize, c: usize| m.at(r, c).clone();
    let two = Rational::from(2);
    let rows = vec![
        vec![
            &two * &(e(a, 0, 0) * e(b, 0, 0)),
            e(a, 0, 0) * e(b, 0, 1) + e(a, 0, 1) * e(b, 0, 0),
            &two * &(e(a, 0, 1) * e(b, 0, 1)),
        ],
        vec![
            &two * &(e(a, 0, 0) * e(b, 1, 0) + e(a, 1, 0) * e(b, 0, 0)),
            e(a, 0, 0) * e(b, 1, 1)
                + e(a, 1, 1) * e(b, 0, 0)
                + e(a, 0, 1) * e(b, 1, 0)
                + e(a, 1, 0) * e(b, 0, 1),
            &two * &(e(a, 0, 1) * e(b, 1, 1) + e(a, 1, 1) * e(b, 0, 1)),
        ],
        vec![
            &two * &(e(a, 1, 0) * e(b, 1, 0)),
            e(a, 1, 0) * e(b, 1, 1) + e(a, 1, 1) * e(b, 1, 0),
            &two * &(e(a, 1, 1) * e(b, 1, 1)),
        ],
    ];
    DenseMatrix::from_rows(rows).expect("grid shape")
}

pub fn suite_odot_example_grid(rng: &mut VerifyRng) -> SuiteResult {
    let mut passed = 0;
    let total = 100;
    for _ in 0..total {
        let a = rdense(rng, 2, 2);
        let b = rdense(rng, 2, 2);
        let product = sym11(&a).odot(&sym11(&b)).expect("same base");
        passed += (product.to_dense() == odot_grid_2x2(&a, &b)) as usize;
    }
    SuiteResult {
        name: "odot-example-grid",
        passed,
        total,
    }
}

// --- suite: the change-of-basis fixture for a 2x3 coefficient block ---

/// The third factor of the action for n = k = 2, written entry by entry
/// in the inverse-change entries. The middle entry is the value forced
/// by the identity action (the normalized square of the identity must
/// be the identity).
fn gl_third_factor_2x2(t: &DenseMatrix) -> DenseMatrix {
    let v = |r: usize, c: usize| t.at(r, c).clone();
    let two = Rational::from(2);
    DenseMatrix::from_rows(vec![
        vec![
            v(0, 0).pow(2).expect("exact"),
            v(0, 0) * v(0, 1),
            v(0, 1).pow(2).expect("exact"),
        ],
        vec![
            &two * &(v(0, 0) * v(1, 0)),
            v(0, 0) * v(1, 1) + v(0, 1) * v(1, 0),
            &two * &(v(0, 1) * v(1, 1)),
        ],
        vec![
            v(1, 0).pow(2).expect("exact"),
            v(1, 0) * v(1, 1),
            v(1, 1).pow(2).expect("exact"),
        ],
    ])
    .expect("grid shape")
}

pub fn suite_gl_action_grid(rng: &mut VerifyRng) -> SuiteResult {
    let mut passed = 0;
    let mut total = 0;

    // Identity changes leave the block alone.
    total += 1;
    let a = rsym(rng, 2, 2, 1, 2);
    let id = DenseMatrix::identity(2);
    passed += (gl_action_homogeneous(&a, &id, &id).expect("shapes agree") == a) as usize;

    for _ in 0..100 {
        total += 1;
        let a = rsym(rng, 2, 2, 1, 2);
        let s = rdense(rng, 2, 2);
        let t_inv = rinvertible(rng, 2);
        let third = gl_third_factor_2x2(&t_inv);
        let powered = sym11(&t_inv).sym_power(2).expect("weight-(1,1) block");
        let acted = gl_action_homogeneous(&a, &s, &t_inv).expect("shapes agree");
        let direct = s
            .matmul(&a.to_dense())
            .expect("chain")
            .matmul(&third)
            .expect("chain");
        let ok = powered.to_dense() == third && acted.to_dense() == direct;
        passed += ok as usize;
    }
    SuiteResult {
        name: "gl-action-grid",
        passed,
        total,
    }
}

// --- suite: wedge entry grids ---

/// Entry grid of the wedge of ordinary 3x3 factors: each entry is a sum
/// of two 2x2 cross determinants.
fn wedge_grid_3x3(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    let pairs = [(0usize, 1usize), (0, 2), (1, 2)];
    DenseMatrix::construct(3, 3, |r, c| {
        let (i1, i2) = pairs[r];
        let (j1, j2) = pairs[c];
        let det1 = a.at(i1, j1) * b.at(i2, j2) - a.at(i1, j2) * b.at(i2, j1);
        let det2 = b.at(i1, j1) * a.at(i2, j2) - b.at(i1, j2) * a.at(i2, j1);
        det1 + det2
    })
}

pub fn suite_wedge_examples(rng: &mut VerifyRng) -> SuiteResult {
    let mut passed = 0;
    let mut total = 0;

    for _ in 0..100 {
        total += 1;
        let a = rdense(rng, 3, 3);
        let b = rdense(rng, 3, 3);
        let w = alt11(&a).wedge(&alt11(&b)).expect("same base");
        passed += (w.to_dense() == wedge_grid_3x3(&a, &b)) as usize;
    }

    // The 2x2 case: the four-term signed expansion.
    for _ in 0..100 {
        total += 1;
        let a = rdense(rng, 2, 2);
        let b = rdense(rng, 2, 2);
        let w = alt11(&a).wedge(&alt11(&b)).expect("same base");
        let expected = a.at(0, 0) * b.at(1, 1) + a.at(1, 1) * b.at(0, 0)
            - a.at(0, 1) * b.at(1, 0)
            - a.at(1, 0) * b.at(0, 1);
        passed += (w.entry_at_rank(0, 0) == &expected) as usize;
    }
    SuiteResult {
        name: "wedge-examples",
        passed,
        total,
    }
}

// --- suite: ⊙ algebra laws ---

pub fn suite_odot_algebra_laws(rng: &mut VerifyRng) -> SuiteResult {
    let mut passed = 0;
    let mut total = 0;

    // Commutativity, bilinearity, associativity, scalar pull-out.
    for _ in 0..60 {
        total += 1;
        let n = rng.gen_range(1..=3);
        let n_prime = rng.gen_range(1..=3);
        let (p, pp) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        let (q, qp) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        let a = rsym(rng, n, n_prime, p, pp);
        let a2 = rsym(rng, n, n_prime, p, pp);
        let b = rsym(rng, n, n_prime, q, qp);
        let (r, rp) = (rng.gen_range(0..=1), rng.gen_range(0..=1));
        let c = rsym(rng, n, n_prime, r, rp);
        let lam = rq(rng);
        let ok = a.odot(&b).expect("base") == b.odot(&a).expect("base")
            && a.add(&a2).expect("stratum").odot(&b).expect("base")
                == a.odot(&b)
                    .expect("base")
                    .add(&a2.odot(&b).expect("base"))
                    .expect("stratum")
            && a.odot(&b).expect("base").odot(&c).expect("base")
                == a.odot(&b.odot(&c).expect("base")).expect("base")
            && a.scale(&lam).odot(&b).expect("base") == a.odot(&b).expect("base").scale(&lam);
        passed += ok as usize;
    }

    // Triangular closure on square strata.
    for _ in 0..40 {
        total += 1;
        let n = rng.gen_range(1..=3);
        let p = rng.gen_range(1..=2);
        let q = rng.gen_range(1..=2);
        let a = upper_sym(rng, n, p);
        let b = upper_sym(rng, n, q);
        let ok = a.to_dense().is_upper_triangular()
            && a.odot(&b).expect("base").to_dense().is_upper_triangular();
        passed += ok as usize;
    }

    // No zero divisors over the rationals.
    for _ in 0..40 {
        total += 1;
        let n = rng.gen_range(1..=3);
        let n_prime = rng.gen_range(1..=3);
        let (p, pp) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        let (q, qp) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        let a = rsym_nonzero(rng, n, n_prime, p, pp);
        let b = rsym_nonzero(rng, n, n_prime, q, qp);
        passed += (!a.odot(&b).expect("base").is_zero()) as usize;
    }

    // Mixed flat/graded identities with weight-(s, 0) and (0, s) factors.
    for _ in 0..40 {
        total += 1;
        let n = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=3);
        let s = rng.gen_range(1..=2);
        let (p, pm, pb) = (
            rng.gen_range(0..=2),
            rng.gen_range(0..=2),
            rng.gen_range(0..=2),
        );
        let a = rsym(rng, n, m, p, pm);
        let b = rsym(rng, m, m, pm, pb);
        let v = SymMatrix::from_dense(n, m, s, 0, &rdense(rng, multiindex::stratum_size(n, s), 1))
            .expect("column shape");
        let lhs = a.odot(&v).expect("base").matmul(&b).expect("chain");
        let rhs = a.matmul(&b).expect("chain").odot(&v).expect("base");
        let ok_v = lhs == rhs;

        let n_prime = rng.gen_range(1..=3);
        let (pa, ph) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        let a2 = rsym(rng, m, m, pa, p);
        let b2 = rsym(rng, m, n_prime, p, ph);
        let h = SymMatrix::from_dense(
            m,
            n_prime,
            0,
            s,
            &rdense(rng, 1, multiindex::stratum_size(n_prime, s)),
        )
        .expect("row shape");
        let lhs = a2.matmul(&b2.odot(&h).expect("base")).expect("chain");
        let rhs = a2.matmul(&b2).expect("chain").odot(&h).expect("base");
        passed += (ok_v && lhs == rhs) as usize;
    }

    // Powers of rows and columns against the closed monomial forms.
    for _ in 0..40 {
        total += 1;
        let dim = rng.gen_range(1..=3);
        let m = rng.gen_range(0..=3);
        let values = rvec(rng, dim);
        let v = column_vector(&values);
        let h = row_covector(&values);
        let v_pow = v.odot_power(m).expect("base");
        let h_pow = h.odot_power(m).expect("base");
        let fact = Rational::factorial(m);
        let ok = multiindex::stratum(dim, m)
            .iter()
            .enumerate()
            .all(|(i, alpha)| {
                let monomial = alpha.monomial(&values).expect("dims agree");
                v_pow.entry_at_rank(i, 0) == &(multinomial(alpha) * &monomial)
                    && h_pow.entry_at_rank(0, i) == &(&fact * &monomial)
            });
        passed += ok as usize;
    }

    // Scaled-power factorization through row and column powers.
    for _ in 0..40 {
        total += 1;
        let n = rng.gen_range(1..=2);
        let n_prime = rng.gen_range(1..=2);
        let (p, q) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        let (pp, qp) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        let a = rsym(rng, n, n_prime, p, pp);
        let b = rsym(rng, n, n_prime, q, qp);
        let h = row_covector(&rvec(rng, n));
        let v = column_vector(&rvec(rng, n_prime));

        let lhs = h
            .sym_power(p)
            .expect("base")
            .matmul(&a)
            .expect("chain")
            .odot(&h.sym_power(q).expect("base").matmul(&b).expect("chain"))
            .expect("base");
        let rhs = h
            .sym_power(p + q)
            .expect("base")
            .matmul(&a.odot(&b).expect("base"))
            .expect("chain");
        let ok_rows = lhs == rhs;

        let lhs = a
            .matmul(&v.sym_power(pp).expect("base"))
            .expect("chain")
            .odot(&b.matmul(&v.sym_power(qp).expect("base")).expect("chain"))
            .expect("base");
        let rhs = a
            .odot(&b)
            .expect("base")
            .matmul(&v.sym_power(pp + qp).expect("base"))
            .expect("chain");
        passed += (ok_rows && lhs == rhs) as usize;
    }

    // A shared eigenvector of diagonal factors scales their product.
    for _ in 0..30 {
        total += 1;
        let n = rng.gen_range(1..=3);
        let k = rng.gen_range(1..=3);
        let j = rng.gen_range(0..n);
        let factors: Vec<DenseMatrix> = (0..k)
            .map(|_| {
                DenseMatrix::from_entries(n, n, {
                    let mut d = vec![Rational::zero(); n * n];
                    for i in 0..n {
                        d[i * n + i] = rq(rng);
                    }
                    d
                })
                .expect("shape")
            })
            .collect();
        let eigenvalue: Rational = factors
            .iter()
            .fold(Rational::one(), |acc, f| acc * f.at(j, j));
        let mut product = SymMatrix::unit(n, n);
        for f in &factors {
            product = product.odot(&sym11(f)).expect("base");
        }
        let basis: Vec<Rational> = (0..n)
            .map(|i| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        let v_pow = column_vector(&basis).odot_power(k).expect("base");
        let lhs = product.matmul(&v_pow).expect("chain");
        let rhs = v_pow.scale(&(Rational::factorial(k) * &eigenvalue));
        passed += (lhs == rhs) as usize;
    }

    // Images under an ordinary matrix multiply out of the graded product.
    for _ in 0..40 {
        total += 1;
        let n = rng.gen_range(1..=3);
        let n_prime = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=3);
        let a = rdense(rng, n, n_prime);
        let vectors: Vec<Vec<Rational>> = (0..m).map(|_| rvec(rng, n_prime)).collect();
        let mut lhs = SymMatrix::unit(n, n);
        for v in &vectors {
            lhs = lhs
                .odot(&column_vector(&a.matvec(v).expect("dims")))
                .expect("base");
        }
        let mut source_product = SymMatrix::unit(n_prime, n_prime);
        for v in &vectors {
            source_product = source_product.odot(&column_vector(v)).expect("base");
        }
        let rhs = sym11(&a)
            .sym_power(m)
            .expect("base")
            .matmul(&source_product)
            .expect("chain");
        let ok = column_entries(&lhs).expect("column") == column_entries(&rhs).expect("column");
        passed += ok as usize;
    }

    SuiteResult {
        name: "odot-algebra-laws",
        passed,
        total,
    }
}

fn upper_sym(rng: &mut VerifyRng, n: usize, p: usize) -> SymMatrix {
    let size = multiindex::stratum_size(n, p);
    let mut entries = Vec::with_capacity(size * size);
    for r in 0..size {
        for c in 0..size {
            entries.push(if r <= c { rq(rng) } else { Rational::zero() });
        }
    }
    SymMatrix::from_dense(
        n,
        n,
        p,
        p,
        &DenseMatrix::from_entries(size, size, entries).expect("shape"),
    )
    .expect("shape")
}

// --- suite: ∧ algebra laws ---

pub fn suite_wedge_algebra_laws(rng: &mut VerifyRng) -> SuiteResult {
    let mut passed = 0;
    let mut total = 0;

    // Graded anticommutativity, bilinearity, scalar pull-out.
    for _ in 0..60 {
        total += 1;
        let n = rng.gen_range(1..=4);
        let n_prime = rng.gen_range(1..=4);
        let (p, pp) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        let (q, qp) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        let a = ralt(rng, n, n_prime, p, pp);
        let a2 = ralt(rng, n, n_prime, p, pp);
        let b = ralt(rng, n, n_prime, q, qp);
        let lam = rq(rng);
        let sign = if (p * q + pp * qp) % 2 == 0 { 1 } else { -1 };
        let ba = b.wedge(&a).expect("base");
        let signed_ba = if sign > 0 { ba.clone() } else { ba.neg() };
        let ok = a.wedge(&b).expect("base") == signed_ba
            && a.add(&a2).expect("stratum").wedge(&b).expect("base")
                == a.wedge(&b)
                    .expect("base")
                    .add(&a2.wedge(&b).expect("base"))
                    .expect("stratum")
            && a.scale(&lam).wedge(&b).expect("base") == a.wedge(&b).expect("base").scale(&lam);
        passed += ok as usize;
    }

    // Associativity on triples with small weights.
    for _ in 0..40 {
        total += 1;
        let n = 4;
        let n_prime = 4;
        let (p, q, r) = (
            rng.gen_range(0..=2),
            rng.gen_range(0..=1),
            rng.gen_range(0..=1),
        );
        let (pp, qp, rp) = (
            rng.gen_range(0..=2),
            rng.gen_range(0..=1),
            rng.gen_range(0..=1),
        );
        let a = ralt(rng, n, n_prime, p, pp);
        let b = ralt(rng, n, n_prime, q, qp);
        let c = ralt(rng, n, n_prime, r, rp);
        let lhs = a.wedge(&b).expect("base").wedge(&c).expect("base");
        let rhs = a.wedge(&b.wedge(&c).expect("base")).expect("base");
        passed += (lhs == rhs) as usize;
    }

    // Triangular closure on square strata.
    for _ in 0..30 {
        total += 1;
        let n = rng.gen_range(2..=4);
        let (p, q) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let a = upper_alt(rng, n, p);
        let b = upper_alt(rng, n, q);
        passed += a.wedge(&b).expect("base").to_dense().is_upper_triangular() as usize;
    }

    // Multi-factor fold against the direct double-shuffle formula.
    for _ in 0..40 {
        total += 1;
        let n = 4;
        let n_prime = 4;
        let mut factors = Vec::with_capacity(3);
        for _ in 0..3 {
            let (p, pp) = (rng.gen_range(0..=1), rng.gen_range(0..=1));
            factors.push(ralt(rng, n, n_prime, p, pp));
        }
        let fold = multi_wedge(n, n_prime, &factors).expect("base");
        let ok = fold.row_stratum().iter().all(|row| {
            fold.col_stratum().iter().all(|col| {
                fold.entry(row, col).expect("in range") == &multi_wedge_direct(&factors, row, col)
            })
        });
        passed += ok as usize;
    }

    // Vector antisymmetry and the full-tuple determinant identity.
    for _ in 0..30 {
        total += 1;
        let n = rng.gen_range(2..=4);
        let x = rvec(rng, n);
        let y = rvec(rng, n);
        let xw = alt_column_vector(&x);
        let yw = alt_column_vector(&y);
        let anti = xw.wedge(&xw).expect("base").is_zero()
            && xw.wedge(&yw).expect("base") == yw.wedge(&xw).expect("base").neg();

        let columns: Vec<Vec<Rational>> = (0..n).map(|_| rvec(rng, n)).collect();
        let vectors: Vec<AltMatrix> = columns.iter().map(|c| alt_column_vector(c)).collect();
        let w = multi_wedge(n, n, &vectors).expect("base");
        let m = DenseMatrix::construct(n, n, |r, c| columns[c][r].clone());
        let ok = anti && w.entry_at_rank(0, 0) == &m.det().expect("square");
        passed += ok as usize;
    }

    // Both signed product sums for entries of the repeated wedge.
    for _ in 0..40 {
        total += 1;
        let n = rng.gen_range(2..=4);
        let n_prime = rng.gen_range(2..=4);
        let k = rng.gen_range(1..=n.min(n_prime));
        let a = rdense(rng, n, n_prime);
        let power = alt11(&a).wedge_power(k).expect("weight-(1,1)");
        let ok = power.row_stratum().iter().all(|row| {
            power.col_stratum().iter().all(|col| {
                let entry = power.entry(row, col).expect("in range");
                entry == &signed_sum_rows(&a, row, col) && entry == &signed_sum_cols(&a, row, col)
            })
        });
        passed += ok as usize;
    }

    SuiteResult {
        name: "wedge-algebra-laws",
        passed,
        total,
    }
}

fn upper_alt(rng: &mut VerifyRng, n: usize, p: usize) -> AltMatrix {
    let size = multiindex::strict_stratum_size(n, p);
    let mut entries = Vec::with_capacity(size * size);
    for r in 0..size {
        for c in 0..size {
            entries.push(if r <= c { rq(rng) } else { Rational::zero() });
        }
    }
    AltMatrix::from_dense(
        n,
        n,
        p,
        p,
        &DenseMatrix::from_entries(size, size, entries).expect("shape"),
    )
    .expect("shape")
}

/// The direct multi-factor entry formula: a sum over one block shuffle
/// per side, signed, of products of factor entries.
fn multi_wedge_direct(factors: &[AltMatrix], row: &StrictIndex, col: &StrictIndex) -> Rational {
    let row_sizes: Vec<usize> = factors.iter().map(AltMatrix::p).collect();
    let col_sizes: Vec<usize> = factors.iter().map(AltMatrix::p_prime).collect();
    let mut acc = Rational::zero();
    for sigma in block_shuffles(&row_sizes) {
        for sigma_p in block_shuffles(&col_sizes) {
            let mut term = Rational::one();
            let mut row_off = 0;
            let mut col_off = 0;
            for (factor, (&pk, &ppk)) in factors.iter().zip(row_sizes.iter().zip(&col_sizes)) {
                let sub_row: Vec<usize> = (0..pk)
                    .map(|t| row.entries()[sigma.apply(row_off + t)])
                    .collect();
                let sub_col: Vec<usize> = (0..ppk)
                    .map(|t| col.entries()[sigma_p.apply(col_off + t)])
                    .collect();
                let sub_row = StrictIndex::new(sub_row, factor.n()).expect("increasing");
                let sub_col = StrictIndex::new(sub_col, factor.n_prime()).expect("increasing");
                term *= factor.entry(&sub_row, &sub_col).expect("in range");
                row_off += pk;
                col_off += ppk;
            }
            if sigma.sign() * sigma_p.sign() < 0 {
                acc -= &term;
            } else {
                acc += &term;
            }
        }
    }
    acc
}

/// `k!` times the signed sum over row rearrangements of entry products.
fn signed_sum_rows(a: &DenseMatrix, row: &StrictIndex, col: &StrictIndex) -> Rational {
    let k = row.len();
    let mut acc = Rational::zero();
    for perm in block_shuffles(&vec![1; k]) {
        let mut term = Rational::one();
        for i in 0..k {
            term *= a.at(row.entries()[perm.apply(i)] - 1, col.entries()[i] - 1);
        }
        if perm.sign() < 0 {
            acc -= &term;
        } else {
            acc += &term;
        }
    }
    acc * Rational::factorial(k)
}

/// The column-side mirror of [`signed_sum_rows`].
fn signed_sum_cols(a: &DenseMatrix, row: &StrictIndex, col: &StrictIndex) -> Rational {
    let k = row.len();
    let mut acc = Rational::zero();
    for perm in block_shuffles(&vec![1; k]) {
        let mut term = Rational::one();
        for i in 0..k {
            term *= a.at(row.entries()[i] - 1, col.entries()[perm.apply(i)] - 1);
        }
        if perm.sign() < 0 {
            acc -= &term;
        } else {
            acc += &term;
        }
    }
    acc * Rational::factorial(k)
}

// --- suite: normalized ⊙-power laws ---

pub fn suite_sym_power_laws(rng: &mut VerifyRng) -> SuiteResult {
    let mut passed = 0;
    let mut total = 0;

    // Spectrum on upper triangular input: monomials in the diagonal.
    for _ in 0..50 {
        total += 1;
        let n = rng.gen_range(1..=4);
        let k = rng.gen_range(0..=3);
        let a = rupper_matrix(rng, n);
        let powered = sym11(&a).sym_power(k).expect("base").to_dense();
        let mut expected: Vec<Rational> = multiindex::stratum(n, k)
            .iter()
            .map(|alpha| {
                alpha
                    .entries()
                    .iter()
                    .enumerate()
                    .fold(Rational::one(), |acc, (i, &e)| {
                        acc * a.at(i, i).pow(e as i32).expect("exact")
                    })
            })
            .collect();
        expected.sort();
        let ok = powered.is_upper_triangular()
            && powered.triangular_spectrum().expect("triangular") == expected;
        passed += ok as usize;
    }

    // Rank law: the power of a rank-l matrix has the l-variable stratum
    // size as its rank.
    for _ in 0..50 {
        total += 1;
        let n = rng.gen_range(1..=4);
        let l = rng.gen_range(0..=n);
        let k = rng.gen_range(0..=3);
        let a = rrank_exact(rng, n, l);
        let powered = sym11(&a).sym_power(k).expect("base");
        passed += (powered.to_dense().rank() == multiindex::stratum_size(l, k)) as usize;
    }

    // Determinant law.
    for _ in 0..50 {
        total += 1;
        let n = rng.gen_range(1..=3);
        let k = rng.gen_range(0..=3);
        let a = rdense(rng, n, n);
        let powered = sym11(&a).sym_power(k).expect("base");
        let exponent = binomial(k + n - 1, n) as i32;
        let det = a.det().expect("square");
        let ok = if det.is_zero() && exponent > 0 {
            powered.to_dense().det().expect("square").is_zero()
        } else {
            powered.to_dense().det().expect("square") == det.pow(exponent).expect("exact")
        };
        passed += ok as usize;
    }

    // Functoriality under flat products, and inverses of powers.
    for _ in 0..50 {
        total += 1;
        let n = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=3);
        let n_prime = rng.gen_range(1..=3);
        let k = rng.gen_range(0..=2);
        let a = rdense(rng, n, m);
        let b = rdense(rng, m, n_prime);
        let ab = a.matmul(&b).expect("chain");
        let lhs = sym11(&ab).sym_power(k).expect("base");
        let rhs = sym11(&a)
            .sym_power(k)
            .expect("base")
            .matmul(&sym11(&b).sym_power(k).expect("base"))
            .expect("chain");
        let functorial = lhs == rhs;

        let t = rinvertible(rng, n);
        let t_inv = t.inverse().expect("invertible");
        let product = sym11(&t)
            .sym_power(k)
            .expect("base")
            .matmul(&sym11(&t_inv).sym_power(k).expect("base"))
            .expect("chain");
        let identity = DenseMatrix::identity(multiindex::stratum_size(n, k));
        passed += (functorial && product.to_dense() == identity) as usize;
    }

    SuiteResult {
        name: "sym-power-laws",
        passed,
        total,
    }
}

// --- suite: compound matrix laws ---

pub fn suite_compound_laws(rng: &mut VerifyRng) -> SuiteResult {
    let mut passed = 0;
    let mut total = 0;

    // Entries are minors: checked against cofactor determinants.
    for _ in 0..50 {
        total += 1;
        let n = rng.gen_range(1..=4);
        let n_prime = rng.gen_range(1..=4);
        let k = rng.gen_range(0..=n.min(n_prime).min(3));
        let a = rdense(rng, n, n_prime);
        let compound = alt11(&a).compound(k).expect("weight-(1,1)");
        let ok = compound.row_stratum().iter().all(|row| {
            compound
                .col_stratum()
                .iter()
                .all(|col| compound.entry(row, col).expect("in range") == &minor(&a, row, col))
        });
        passed += ok as usize;
    }

    // Products of images wedge into the compound action.
    for _ in 0..50 {
        total += 1;
        let n = rng.gen_range(1..=4);
        let n_prime = rng.gen_range(1..=4);
        let k = rng.gen_range(1..=3.min(n));
        let a = rdense(rng, n, n_prime);
        let vectors: Vec<Vec<Rational>> = (0..k).map(|_| rvec(rng, n_prime)).collect();
        let mut lhs = AltMatrix::unit(n, n);
        for v in &vectors {
            lhs = lhs
                .wedge(&alt_column_vector(&a.matvec(v).expect("dims")))
                .expect("base");
        }
        let mut xw = AltMatrix::unit(n_prime, n_prime);
        for v in &vectors {
            xw = xw.wedge(&alt_column_vector(v)).expect("base");
        }
        let rhs = alt11(&a)
            .compound(k)
            .expect("weight-(1,1)")
            .matmul(&xw)
            .expect("chain");
        let ok =
            alt_column_entries(&lhs).expect("column") == alt_column_entries(&rhs).expect("column");
        passed += ok as usize;
    }

    // Multiplicativity under flat products.
    for _ in 0..50 {
        total += 1;
        let n = rng.gen_range(1..=4);
        let m = rng.gen_range(1..=4);
        let n_prime = rng.gen_range(1..=4);
        let k = rng.gen_range(0..=3);
        let a = rdense(rng, n, m);
        let b = rdense(rng, m, n_prime);
        let lhs = alt11(&a.matmul(&b).expect("chain"))
            .compound(k)
            .expect("weight-(1,1)");
        let rhs = alt11(&a)
            .compound(k)
            .expect("weight-(1,1)")
            .matmul(&alt11(&b).compound(k).expect("weight-(1,1)"))
            .expect("chain");
        passed += (lhs == rhs) as usize;
    }

    // Rank law.
    for _ in 0..50 {
        total += 1;
        let n = rng.gen_range(1..=4);
        let l = rng.gen_range(0..=n);
        let k = rng.gen_range(0..=3);
        let a = rrank_exact(rng, n, l);
        let power = alt11(&a).wedge_power(k).expect("weight-(1,1)");
        passed += (power.to_dense().rank() == binomial(l, k)) as usize;
    }

    // Determinant law on square input.
    for _ in 0..50 {
        total += 1;
        let n = rng.gen_range(1..=4);
        let k = rng.gen_range(1..=n);
        let a = rdense(rng, n, n);
        let compound = alt11(&a).compound(k).expect("weight-(1,1)");
        let exponent = binomial(n - 1, k - 1) as i32;
        let det = a.det().expect("square");
        let ok = if det.is_zero() && exponent > 0 {
            compound.to_dense().det().expect("square").is_zero()
        } else {
            compound.to_dense().det().expect("square") == det.pow(exponent).expect("exact")
        };
        passed += ok as usize;
    }

    // Spectrum on triangular input: products over increasing tuples.
    for _ in 0..25 {
        total += 1;
        let n = rng.gen_range(1..=4);
        let k = rng.gen_range(1..=n);
        let a = rupper_matrix(rng, n);
        let compound = alt11(&a).compound(k).expect("weight-(1,1)").to_dense();
        let mut expected: Vec<Rational> = multiindex::strict_stratum(n, k)
            .iter()
            .map(|idx| {
                idx.entries()
                    .iter()
                    .fold(Rational::one(), |acc, &i| acc * a.at(i - 1, i - 1))
            })
            .collect();
        expected.sort();
        let ok = compound.is_upper_triangular()
            && compound.triangular_spectrum().expect("triangular") == expected;
        passed += ok as usize;
    }

    // Eigenvector law on diagonal instances.
    for _ in 0..25 {
        total += 1;
        let n = rng.gen_range(2..=4);
        let k = rng.gen_range(1..=n);
        let diag: Vec<Rational> = rvec(rng, n);
        let a = DenseMatrix::construct(n, n, |r, c| {
            if r == c {
                diag[r].clone()
            } else {
                Rational::zero()
            }
        });
        let compound = alt11(&a).compound(k).expect("weight-(1,1)");
        let tuple = multiindex::strict_stratum(n, k);
        let ok = tuple.iter().all(|idx| {
            let mut basis_wedge = AltMatrix::zeros(n, n, k, 0);
            basis_wedge
                .set_entry(idx, &StrictIndex::empty(), Rational::one())
                .expect("in range");
            let image = compound.matmul(&basis_wedge).expect("chain");
            let eigenvalue = idx
                .entries()
                .iter()
                .fold(Rational::one(), |acc, &i| acc * &diag[i - 1]);
            image == basis_wedge.scale(&eigenvalue)
        });
        passed += ok as usize;
    }

    // Change of basis: identity and group law.
    for _ in 0..25 {
        total += 1;
        let n = rng.gen_range(2..=3);
        let p = rng.gen_range(1..=n);
        let a = ralt(rng, n, n, 1, p);
        let t1 = rinvertible(rng, n);
        let t2 = rinvertible(rng, n);
        let step =
            gl_action_antisym(&gl_action_antisym(&a, &t1).expect("shapes"), &t2).expect("shapes");
        let joint = gl_action_antisym(&a, &t1.matmul(&t2).expect("chain")).expect("shapes");
        let id_ok = gl_action_antisym(&a, &DenseMatrix::identity(n)).expect("shapes") == a;
        passed += (id_ok && step == joint) as usize;
    }

    SuiteResult {
        name: "compound-laws",
        passed,
        total,
    }
}

/// Determinant of the submatrix picked out by strict row/column tuples.
fn minor(a: &DenseMatrix, rows: &StrictIndex, cols: &StrictIndex) -> Rational {
    let k = rows.len();
    let sub = DenseMatrix::construct(k, k, |r, c| {
        a.at(rows.entries()[r] - 1, cols.entries()[c] - 1).clone()
    });
    sub.det().expect("square")
}

// --- suite: composition ---

pub fn suite_composition_oracle(rng: &mut VerifyRng) -> SuiteResult {
    let mut passed = 0;
    let mut total = 0;

    // Pointwise: composing matrices equals composing evaluations. The
    // first 30 instances also get the two exponential identities, on
    // the same maps.
    for i in 0..100 {
        total += 1;
        let n_in = rng.gen_range(1..=3);
        let n_mid = rng.gen_range(1..=3);
        let n_out = rng.gen_range(1..=3);
        let outer_degree = rng.gen_range(0..=3);
        let outer = rpolymap(rng, n_mid, n_out, outer_degree);
        let inner_degree = rng.gen_range(0..=3);
        let inner = rpolymap(rng, n_in, n_mid, inner_degree);
        let composed = outer.compose(&inner).expect("dims chain");
        let ok = (0..3).all(|_| {
            let x = rvec(rng, n_in);
            composed.eval(&x).expect("dims")
                == outer.eval(&inner.eval(&x).expect("dims")).expect("dims")
        });
        passed += ok as usize;

        if i < 30 {
            // Exponential of an evaluation against the matrix
            // exponential of the inner map.
            total += 1;
            let x = rvec(rng, n_in);
            let y = inner.eval(&x).expect("dims");
            let max_p = 3;
            let col_bound = max_p * inner.degree();
            let lhs = exp_point(&y, max_p);
            let rhs = inner
                .to_block_matrix()
                .exp(max_p, col_bound)
                .expect("row weight 1")
                .matmul(&exp_point(&x, col_bound))
                .expect("dims chain");
            // The weight-0 column index carries no base dimension;
            // compare column entries blockwise.
            let ok = (0..=max_p).all(|p| match (lhs.block(p, 0), rhs.block(p, 0)) {
                (None, None) => true,
                (Some(l), Some(r)) => {
                    column_entries(l).expect("column") == column_entries(r).expect("column")
                }
                (Some(only), None) | (None, Some(only)) => only.is_zero(),
            });
            passed += ok as usize;

            // Exponential of the composition against the product of
            // exponentials, on a bounded weight window.
            total += 1;
            let (rows, cols) = (2, 4);
            let lhs = composed
                .to_block_matrix()
                .exp(rows, cols)
                .expect("row weight 1");
            let rhs = outer
                .to_block_matrix()
                .exp(rows, rows * outer.degree())
                .expect("row weight 1")
                .matmul(
                    &inner
                        .to_block_matrix()
                        .exp(rows * outer.degree(), cols)
                        .expect("row weight 1"),
                )
                .expect("dims chain");
            passed += (lhs == rhs) as usize;
        }
    }

    // Associativity of composition.
    for _ in 0..20 {
        total += 1;
        let dims: Vec<usize> = (0..4).map(|_| rng.gen_range(1..=2)).collect();
        let f_degree = rng.gen_range(0..=2);
        let f = rpolymap(rng, dims[1], dims[0], f_degree);
        let g_degree = rng.gen_range(0..=2);
        let g = rpolymap(rng, dims[2], dims[1], g_degree);
        let h_degree = rng.gen_range(0..=2);
        let h = rpolymap(rng, dims[3], dims[2], h_degree);
        let lhs = f.compose(&g).expect("chain").compose(&h).expect("chain");
        let rhs = f.compose(&g.compose(&h).expect("chain")).expect("chain");
        passed += (lhs == rhs) as usize;
    }

    SuiteResult {
        name: "composition-oracle",
        passed,
        total,
    }
}

// --- suite: change of variables ---

pub fn suite_change_of_variables(rng: &mut VerifyRng) -> SuiteResult {
    let mut passed = 0;
    let mut total = 0;

    // Pointwise: the rewritten map tracks new-coordinate evaluation.
    for _ in 0..50 {
        total += 1;
        let n_in = rng.gen_range(1..=2);
        let n_out = rng.gen_range(1..=2);
        let phi_degree = rng.gen_range(0..=2);
        let phi = rpolymap(rng, n_in, n_out, phi_degree);
        let s_out = rng.gen_range(1..=2);
        let s_degree = rng.gen_range(0..=2);
        let s = rpolymap(rng, n_out, s_out, s_degree);
        let t_in = rng.gen_range(1..=2);
        let t_inv_degree = rng.gen_range(0..=2);
        let t_inv = rpolymap(rng, t_in, n_in, t_inv_degree);
        let changed = phi.change_of_variables(&s, &t_inv).expect("dims chain");
        let ok = (0..3).all(|_| {
            let x = rvec(rng, t_inv.n_in());
            changed.eval(&x).expect("dims")
                == s.eval(&phi.eval(&t_inv.eval(&x).expect("dims")).expect("dims"))
                    .expect("dims")
        });
        passed += ok as usize;
    }

    // Linear changes of a homogeneous block reproduce the direct action.
    for _ in 0..50 {
        total += 1;
        let n_in = rng.gen_range(1..=2);
        let n_out = rng.gen_range(1..=2);
        let k = rng.gen_range(1..=2);
        let a = rsym_nonzero(rng, n_out, n_in, 1, k);
        let mut blocks: Vec<SymMatrix> = (0..k)
            .map(|d| SymMatrix::zeros(n_out, n_in, 1, d))
            .collect();
        blocks.push(a.clone());
        let phi = PolyMap::from_blocks(n_in, n_out, blocks).expect("blocks well formed");
        let s = rinvertible(rng, n_out);
        let t = rinvertible(rng, n_in);
        let t_inv = t.inverse().expect("invertible");
        let changed = phi
            .change_of_variables(&PolyMap::linear(&s), &PolyMap::linear(&t_inv))
            .expect("dims chain");
        let acted = gl_action_homogeneous(&a, &s, &t_inv).expect("shapes");
        let ok = changed.degree() == k
            && changed.block(k) == Some(&acted)
            && (0..k).all(|d| changed.block(d).is_none_or(SymMatrix::is_zero))
            && acted.to_dense().rank() == a.to_dense().rank();
        passed += ok as usize;
    }

    // Group law of the homogeneous action.
    for _ in 0..30 {
        total += 1;
        let n = rng.gen_range(1..=2);
        let n_prime = rng.gen_range(1..=3);
        let k = rng.gen_range(1..=2);
        let a = rsym(rng, n, n_prime, 1, k);
        let s1 = rinvertible(rng, n);
        let s2 = rinvertible(rng, n);
        let t1_inv = rinvertible(rng, n_prime);
        let t2_inv = rinvertible(rng, n_prime);
        let step = gl_action_homogeneous(
            &gl_action_homogeneous(&a, &s1, &t1_inv).expect("shapes"),
            &s2,
            &t2_inv,
        )
        .expect("shapes");
        let joint = gl_action_homogeneous(
            &a,
            &s2.matmul(&s1).expect("chain"),
            &t1_inv.matmul(&t2_inv).expect("chain"),
        )
        .expect("shapes");
        passed += (step == joint) as usize;
    }

    SuiteResult {
        name: "change-of-variables",
        passed,
        total,
    }
}

// --- suite: multilinear representations ---

pub fn suite_multilinear_products(rng: &mut VerifyRng) -> SuiteResult {
    let mut passed = 0;
    let mut total = 0;

    // Faithfulness of the symmetric representation.
    for _ in 0..50 {
        total += 1;
        let n = rng.gen_range(1..=3);
        let out = rng.gen_range(1..=2);
        let p = rng.gen_range(1..=3);
        let t = rtensor(rng, out, n, p).symmetrize();
        let map = SymMultiMap::from_symmetric_tensor(&t).expect("row weight 1");
        let ok = (0..2).all(|_| {
            let args: Vec<Vec<Rational>> = (0..p).map(|_| rvec(rng, n)).collect();
            let refs: Vec<&[Rational]> = args.iter().map(Vec::as_slice).collect();
            map.eval(&refs).expect("arity") == t.eval(&refs).expect("arity")
        });
        passed += ok as usize;
    }

    // Faithfulness of the antisymmetric representation.
    for _ in 0..50 {
        total += 1;
        let n = rng.gen_range(2..=4);
        let out = rng.gen_range(1..=2);
        let p = rng.gen_range(1..=3.min(n));
        let t = rtensor(rng, out, n, p).alternate();
        let map = AltMultiMap::from_alternating_tensor(&t).expect("row weight 1");
        let ok = (0..2).all(|_| {
            let args: Vec<Vec<Rational>> = (0..p).map(|_| rvec(rng, n)).collect();
            let refs: Vec<&[Rational]> = args.iter().map(Vec::as_slice).collect();
            map.eval(&refs).expect("arity") == t.eval(&refs).expect("arity")
        });
        passed += ok as usize;
    }

    // Symmetry and alternation of evaluation under argument swaps.
    for _ in 0..30 {
        total += 1;
        let n = rng.gen_range(2..=3);
        let p = rng.gen_range(2..=3.min(n));
        let sym_map = SymMultiMap::from_matrix(rsym(rng, 2, n, 1, p)).expect("row weight 1");
        let alt_map = AltMultiMap::from_matrix(ralt(rng, 2, n, 1, p)).expect("row weight 1");
        let args: Vec<Vec<Rational>> = (0..p).map(|_| rvec(rng, n)).collect();
        let refs: Vec<&[Rational]> = args.iter().map(Vec::as_slice).collect();
        let mut swapped = refs.clone();
        swapped.swap(0, 1);
        let sym_ok = sym_map.eval(&refs).expect("arity") == sym_map.eval(&swapped).expect("arity");
        let alt_value = alt_map.eval(&refs).expect("arity");
        let alt_swapped = alt_map.eval(&swapped).expect("arity");
        let alt_ok = alt_value.iter().zip(&alt_swapped).all(|(a, b)| a == &(-b));
        passed += (sym_ok && alt_ok) as usize;
    }

    // Pairing product of symmetric maps against the symmetrized
    // definition.
    for _ in 0..100 {
        total += 1;
        let n = rng.gen_range(1..=3);
        let (p, q) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let (n1, n2, n3) = (
            rng.gen_range(1..=2),
            rng.gen_range(1..=2),
            rng.gen_range(1..=2),
        );
        let a = SymMultiMap::from_matrix(rsym(rng, n1, n, 1, p)).expect("row weight 1");
        let b = SymMultiMap::from_matrix(rsym(rng, n2, n, 1, q)).expect("row weight 1");
        let c = BilinearMap::from_coefficients(n3, n1, n2, &rvec(rng, n3 * n1 * n2))
            .expect("coefficient count");
        let prod = multilinear::product_sym(&a, &b, &c).expect("dims chain");
        let args: Vec<Vec<Rational>> = (0..p + q).map(|_| rvec(rng, n)).collect();
        let refs: Vec<&[Rational]> = args.iter().map(Vec::as_slice).collect();
        let ok = prod.eval(&refs).expect("arity") == symmetrized_pairing(&a, &b, &c, &refs);
        passed += ok as usize;
    }

    // Pairing product of antisymmetric maps against the signed shuffle
    // definition.
    for _ in 0..100 {
        total += 1;
        let n = rng.gen_range(2..=3);
        let (p, q) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let (n1, n2, n3) = (
            rng.gen_range(1..=2),
            rng.gen_range(1..=2),
            rng.gen_range(1..=2),
        );
        let a = AltMultiMap::from_matrix(ralt(rng, n1, n, 1, p)).expect("row weight 1");
        let b = AltMultiMap::from_matrix(ralt(rng, n2, n, 1, q)).expect("row weight 1");
        let c = BilinearMap::from_coefficients(n3, n1, n2, &rvec(rng, n3 * n1 * n2))
            .expect("coefficient count");
        let prod = multilinear::product_alt(&a, &b, &c).expect("dims chain");
        let args: Vec<Vec<Rational>> = (0..p + q).map(|_| rvec(rng, n)).collect();
        let refs: Vec<&[Rational]> = args.iter().map(Vec::as_slice).collect();
        let ok = prod.eval(&refs).expect("arity") == shuffled_pairing(&a, &b, &c, &refs);
        passed += ok as usize;
    }

    // Shared-codomain shortcuts match the padded general path.
    for _ in 0..30 {
        total += 1;
        let n = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=2);
        let (p, q) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let a = SymMultiMap::from_matrix(rsym(rng, m, n, 1, p)).expect("row weight 1");
        let b = SymMultiMap::from_matrix(rsym(rng, m, n, 1, q)).expect("row weight 1");
        let c_out = rng.gen_range(1..=2);
        let c = rsym(rng, c_out, m, 1, 2);
        let shortcut = multilinear::product_sym_symmetric(&a, &b, &c).expect("dims chain");
        let lifted = BilinearMap::from_symmetric(&c).expect("weights (1,2)");
        let general = multilinear::product_sym(&a, &b, &lifted).expect("dims chain");
        passed += (shortcut.matrix() == general.matrix()) as usize;
    }

    for _ in 0..30 {
        total += 1;
        let n = rng.gen_range(2..=3);
        let m = rng.gen_range(2..=3);
        let (p, q) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let a = AltMultiMap::from_matrix(ralt(rng, m, n, 1, p)).expect("row weight 1");
        let b = AltMultiMap::from_matrix(ralt(rng, m, n, 1, q)).expect("row weight 1");
        let c_out = rng.gen_range(1..=2);
        let c = ralt(rng, c_out, m, 1, 2);
        let shortcut = multilinear::product_alt_antisymmetric(&a, &b, &c).expect("dims chain");
        let lifted = BilinearMap::from_antisymmetric(&c).expect("weights (1,2)");
        let general = multilinear::product_alt(&a, &b, &lifted).expect("dims chain");
        passed += (shortcut.matrix() == general.matrix()) as usize;
    }

    // The padding identity behind both product constructions.
    for _ in 0..40 {
        total += 1;
        let (n1, n2, n3) = (
            rng.gen_range(1..=3),
            rng.gen_range(1..=3),
            rng.gen_range(1..=2),
        );
        let c = BilinearMap::from_coefficients(n3, n1, n2, &rvec(rng, n3 * n1 * n2))
            .expect("coefficient count");
        let x = rvec(rng, n1);
        let y = rvec(rng, n2);
        let mut padded_x = x.clone();
        padded_x.extend(std::iter::repeat_with(Rational::zero).take(n2));
        let mut padded_y = vec![Rational::zero(); n1];
        padded_y.extend(y.iter().cloned());
        let through_product = column_entries(
            &c.matrix()
                .matmul(
                    &column_vector(&padded_x)
                        .odot(&column_vector(&padded_y))
                        .expect("base"),
                )
                .expect("chain"),
        )
        .expect("column");
        passed += (c.eval(&x, &y).expect("dims") == through_product) as usize;
    }

    SuiteResult {
        name: "multilinear-products",
        passed,
        total,
    }
}

fn rtensor(rng: &mut VerifyRng, out: usize, n: usize, arity: usize) -> Tensor {
    let len = out * n.pow(arity as u32);
    Tensor::new(out, n, arity, rvec(rng, len)).expect("shape matches")
}

/// The averaged pairing over all argument orders.
fn symmetrized_pairing(
    a: &SymMultiMap,
    b: &SymMultiMap,
    c: &BilinearMap,
    args: &[&[Rational]],
) -> Vec<Rational> {
    let p = a.arity();
    let total = args.len();
    let mut acc = vec![Rational::zero(); c.out_dim()];
    for perm in block_shuffles(&vec![1; total]) {
        let front: Vec<&[Rational]> = (0..p).map(|i| args[perm.apply(i)]).collect();
        let back: Vec<&[Rational]> = (p..total).map(|i| args[perm.apply(i)]).collect();
        let left = a.eval(&front).expect("arity");
        let right = b.eval(&back).expect("arity");
        for (slot, v) in acc.iter_mut().zip(c.eval(&left, &right).expect("dims")) {
            *slot += &v;
        }
    }
    let inv = Rational::factorial(total).recip().expect("nonzero");
    acc.into_iter().map(|v| v * &inv).collect()
}

/// The signed pairing over two-block shuffles of the argument order.
fn shuffled_pairing(
    a: &AltMultiMap,
    b: &AltMultiMap,
    c: &BilinearMap,
    args: &[&[Rational]],
) -> Vec<Rational> {
    let p = a.arity();
    let q = args.len() - p;
    let mut acc = vec![Rational::zero(); c.out_dim()];
    for perm in shuffles(p, q) {
        let front: Vec<&[Rational]> = (0..p).map(|i| args[perm.apply(i)]).collect();
        let back: Vec<&[Rational]> = (p..p + q).map(|i| args[perm.apply(i)]).collect();
        let left = a.eval(&front).expect("arity");
        let right = b.eval(&back).expect("arity");
        for (slot, v) in acc.iter_mut().zip(c.eval(&left, &right).expect("dims")) {
            if perm.sign() < 0 {
                *slot -= &v;
            } else {
                *slot += &v;
            }
        }
    }
    acc
}

// --- suite: norms ---

pub fn suite_norm_bounds(rng: &mut VerifyRng) -> SuiteResult {
    let mut passed = 0;
    let mut total = 0;
    let rhos = [1.0, 1.5, 2.0, 3.0];
    for &rho in rhos.iter().cycle().take(200) {
        total += 1;
        let params = norm::NormParams::new(rho).expect("rho >= 1");
        let n = rng.gen_range(2..=4);
        let n_prime = rng.gen_range(2..=4);
        let (p, pp) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        let (q, qp) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        let a = ralt(rng, n, n_prime, p, pp);
        let a2 = ralt(rng, n, n_prime, p, pp);
        let b = ralt(rng, n, n_prime, q, qp);
        let lam = rq(rng);

        let norm_a = norm::holder_norm(&a, params).expect("finite");
        let norm_a2 = norm::holder_norm(&a2, params).expect("finite");
        let norm_b = norm::holder_norm(&b, params).expect("finite");

        // Definiteness and homogeneity.
        let definite = (norm_a == 0.0) == a.is_zero();
        let scaled = norm::holder_norm(&a.scale(&lam), params).expect("finite");
        let lam_abs = lam.abs().to_f64().expect("small");
        let homogeneous =
            approx_le(scaled, lam_abs * norm_a) && approx_le(lam_abs * norm_a, scaled);

        // Triangle inequality on a shared stratum.
        let sum_norm = norm::holder_norm(&a.add(&a2).expect("stratum"), params).expect("finite");
        let triangle = approx_le(sum_norm, norm_a + norm_a2);

        // Submultiplicativity under the wedge.
        let wedge_norm = norm::holder_norm(&a.wedge(&b).expect("base"), params).expect("finite");
        let submultiplicative = approx_le(wedge_norm, norm_a * norm_b);

        passed += (definite && homogeneous && triangle && submultiplicative) as usize;
    }
    SuiteResult {
        name: "norm-bounds",
        passed,
        total,
    }
}

/// `lhs <= rhs` with 1e-9 relative slack for rounding.
fn approx_le(lhs: f64, rhs: f64) -> bool {
    lhs <= rhs * (1.0 + 1e-9) + 1e-12
}

// --- suite: JSON round-trips ---

pub fn suite_json_roundtrip(rng: &mut VerifyRng) -> SuiteResult {
    use crate::json;
    let mut passed = 0;
    let mut total = 0;
    for _ in 0..40 {
        total += 1;
        let (n, n_prime) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let (p, pp) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        let m = rsym(rng, n, n_prime, p, pp);
        let ok = json::parse_sym_matrix(&json::sym_matrix_to_json(&m)).map(|back| back == m);
        passed += matches!(ok, Ok(true)) as usize;
    }
    for _ in 0..40 {
        total += 1;
        let (n, n_prime) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let (p, pp) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        let m = ralt(rng, n, n_prime, p, pp);
        let ok = json::parse_alt_matrix(&json::alt_matrix_to_json(&m)).map(|back| back == m);
        passed += matches!(ok, Ok(true)) as usize;
    }
    for _ in 0..40 {
        total += 1;
        let (n_in, n_out) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let m_degree = rng.gen_range(0..=2);
        let m = rpolymap(rng, n_in, n_out, m_degree);
        let ok = json::parse_polymap(&json::polymap_to_json(&m)).map(|back| back == m);
        passed += matches!(ok, Ok(true)) as usize;
    }
    for _ in 0..40 {
        total += 1;
        let (rows, cols) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let dense = rdense(rng, rows, cols);
        let ok =
            json::parse_dense_matrix(&json::dense_matrix_to_json(&dense)).map(|back| back == dense);
        passed += matches!(ok, Ok(true)) as usize;
    }
    for _ in 0..40 {
        total += 1;
        let kind_sym = rng.gen_bool(0.5);
        let ok = if kind_sym {
            let arity = rng.gen_range(0..=2);
            let m = SymMultiMap::from_matrix(rsym(rng, 2, 2, 1, arity)).expect("row weight 1");
            json::parse_sym_multimap(&json::sym_multimap_to_json(&m))
                .map(|back| back.matrix() == m.matrix())
        } else {
            let arity = rng.gen_range(0..=2);
            let m = AltMultiMap::from_matrix(ralt(rng, 3, 3, 1, arity)).expect("row weight 1");
            json::parse_alt_multimap(&json::alt_multimap_to_json(&m))
                .map(|back| back.matrix() == m.matrix())
        };
        passed += matches!(ok, Ok(true)) as usize;
    }
    SuiteResult {
        name: "json-roundtrip",
        passed,
        total,
    }
}
