//! Independent reference computations over plain bitmasks. Nothing here
//! calls into the library's cone or checker code.

#![allow(dead_code)]

use posetres::{Poset, Subset};
use proptest::prelude::*;

pub type Mask = u128;

/// The order relation copied out of a poset, plus textbook cone definitions.
pub struct Naive {
    pub n: usize,
    pub le: Vec<Vec<bool>>,
}

impl Naive {
    pub fn new(p: &Poset) -> Self {
        let n = p.len();
        assert!(n <= 128);
        let le = (0..n)
            .map(|i| (0..n).map(|j| p.le(i, j)).collect())
            .collect();
        Naive { n, le }
    }

    pub fn full(&self) -> Mask {
        if self.n == 128 {
            Mask::MAX
        } else {
            (1 << self.n) - 1
        }
    }

    pub fn bit(x: usize) -> Mask {
        1 << x
    }

    pub fn members(&self, a: Mask) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&i| a >> i & 1 == 1)
    }

    /// `{y : y <= a for all a in A}`
    pub fn lower(&self, a: Mask) -> Mask {
        (0..self.n)
            .filter(|&y| self.members(a).all(|x| self.le[y][x]))
            .fold(0, |m, y| m | 1 << y)
    }

    /// `{y : a <= y for all a in A}`
    pub fn upper(&self, a: Mask) -> Mask {
        (0..self.n)
            .filter(|&y| self.members(a).all(|x| self.le[x][y]))
            .fold(0, |m, y| m | 1 << y)
    }

    pub fn lu(&self, a: Mask) -> Mask {
        self.lower(self.upper(a))
    }

    /// `A <= B` elementwise.
    pub fn below(&self, a: Mask, b: Mask) -> bool {
        self.members(a)
            .all(|x| self.members(b).all(|y| self.le[x][y]))
    }

    /// Strict modularity straight from the definition: all `x, y, z` and
    /// all subsets `X, Z`.
    pub fn strictly_modular(&self) -> bool {
        let n = self.n;
        assert!(n <= 12, "2^n subsets");
        let b = Self::bit;
        for x in 0..n {
            for y in 0..n {
                for zs in 0..(1u128 << n) {
                    if self.below(b(x), zs) {
                        let lhs = self.lower(self.upper(b(x) | b(y)) | zs);
                        let rhs = self.lu(b(x) | self.lower(b(y) | zs));
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        for xs in 0..(1u128 << n) {
            let lx = self.lower(xs);
            for y in 0..n {
                for z in 0..n {
                    if self.below(lx, b(z)) {
                        let lhs = self.lower(self.upper(lx | b(y)) | b(z));
                        let rhs = self.lu(lx | self.lower(b(y) | b(z)));
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// All maps satisfying `U(x,x') = {1}` and `L(x,x') = {0}`, by brute
    /// force over all `n^n` maps.
    pub fn complementations(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let bottom = (0..n).find(|&i| (0..n).all(|j| self.le[i][j]));
        let top = (0..n).find(|&i| (0..n).all(|j| self.le[j][i]));
        let (Some(bottom), Some(top)) = (bottom, top) else {
            return Vec::new();
        };
        let ok = |x: usize, c: usize| {
            self.upper(Self::bit(x) | Self::bit(c)) == Self::bit(top)
                && self.lower(Self::bit(x) | Self::bit(c)) == Self::bit(bottom)
        };
        let mut out = Vec::new();
        let total = n.pow(n as u32);
        for code in 0..total {
            let mut map = Vec::with_capacity(n);
            let mut c = code;
            for _ in 0..n {
                map.push(c % n);
                c /= n;
            }
            map.reverse();
            if map.iter().enumerate().all(|(x, &c)| ok(x, c)) {
                out.push(map);
            }
        }
        out
    }

    /// Sets with `LU(A) = A`, by scanning all subsets.
    pub fn closed_sets(&self) -> Vec<Mask> {
        (0..(1u128 << self.n))
            .filter(|&a| self.lu(a) == a)
            .collect()
    }
}

pub fn mask(s: &Subset) -> Mask {
    s.iter().fold(0, |m, x| m | 1 << x)
}

pub fn subset(p: &Poset, m: Mask) -> Subset {
    p.set_of((0..p.len()).filter(|&i| m >> i & 1 == 1))
}

/// Labelled partial orders on `n` points, and how many isomorphism classes
/// they fall into (orbit dedup by minimal code over all permutations).
pub fn labelled_census(n: usize) -> (usize, usize) {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|(i, j)| i < j)
        .collect();
    let perms = permutations(n);
    let mut classes = std::collections::HashSet::new();
    let mut labelled = 0;
    // each unordered pair is unrelated, i<j or j<i
    let total = 3usize.pow(pairs.len() as u32);
    for code in 0..total {
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        let mut c = code;
        for &(i, j) in &pairs {
            match c % 3 {
                1 => le[i][j] = true,
                2 => le[j][i] = true,
                _ => {}
            }
            c /= 3;
        }
        let transitive =
            (0..n).all(|a| (0..n).all(|b| !le[a][b] || (0..n).all(|c| !le[b][c] || le[a][c])));
        if !transitive {
            continue;
        }
        labelled += 1;
        let key = perms
            .iter()
            .map(|pi| {
                let mut k = 0u64;
                for a in 0..n {
                    for b in 0..n {
                        k = k << 1 | u64::from(le[pi[a]][pi[b]]);
                    }
                }
                k
            })
            .min()
            .unwrap();
        classes.insert(key);
    }
    (labelled, classes.len())
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// Random posets: random strict relation on `i < j` pairs, transitively
/// closed.
pub fn arb_poset(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let mut le = vec![vec![false; n]; n];
            for i in 0..n {
                le[i][i] = true;
                for j in i + 1..n {
                    le[i][j] = bits[i * n + j];
                }
            }
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        if le[i][k] && le[k][j] {
                            le[i][j] = true;
                        }
                    }
                }
            }
            let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
            Poset::from_relation(&names, |i, j| le[i][j]).unwrap()
        })
    })
}

/// A poset together with a random subset of it.
pub fn arb_poset_with_sets(max: usize) -> impl Strategy<Value = (Poset, Mask, Mask)> {
    arb_poset(max).prop_flat_map(|p| {
        let n = p.len();
        let full: Mask = (1 << n) - 1;
        (
            Just(p),
            any::<u128>().prop_map(move |m| m & full),
            any::<u128>().prop_map(move |m| m & full),
        )
    })
}

/// For every registry formula with a dedicated checker: the DSL verdict and
/// the checker verdict, or `None` when neither applies to `s`. Panics if
/// exactly one side applies.
pub fn parity(
    s: &posetres::Structure,
) -> Vec<(&'static str, Option<(posetres::Verdict, posetres::Verdict)>)> {
    use posetres::{dsl, props, residuation};
    let p = s.poset();
    let cp = s.complemented();
    let lattice = posetres::lattice::is_lattice(p).holds();
    let mut out = Vec::new();
    let mut case = |name: &'static str, checker: Option<posetres::Verdict>| {
        let f = dsl::builtin(name).unwrap();
        let dsl = dsl::evaluate(&f, s).ok();
        assert_eq!(
            dsl.is_some(),
            checker.is_some(),
            "{name}: applicability differs"
        );
        out.push((name, dsl.zip(checker)));
    };
    case("modular", Some(props::is_modular_poset(p)));
    case("distributive-1", Some(props::distributive_identity_1(p)));
    case("distributive-2", Some(props::distributive_identity_2(p)));
    case(
        "strongly-modular-1",
        Some(props::strongly_modular_identity_1(p)),
    );
    case(
        "strongly-modular-2",
        Some(props::strongly_modular_identity_2(p)),
    );
    case("modular-lattice", props::is_modular_lattice(p).ok());
    case("involution", cp.map(|c| c.involution()));
    case("antitone", cp.map(|c| c.antitone()));
    case(
        "orthomodular-law",
        cp.and_then(|c| props::orthomodular_identity(c).ok()),
    );
    let term = |f: fn(
        &posetres::ComplementedPoset,
    ) -> Result<posetres::Verdict, residuation::ResiduationError>| {
        cp.filter(|_| lattice).map(|c| f(c).unwrap())
    };
    case(
        "adjointness-lattice-forward",
        term(residuation::lattice_adjointness_forward),
    );
    case(
        "adjointness-lattice-backward",
        term(residuation::lattice_adjointness_backward),
    );
    case("divisible-lattice", term(residuation::lattice_divisibility));
    case(
        "adjointness-operator-forward",
        cp.map(residuation::operator_adjointness_forward),
    );
    case(
        "adjointness-operator-backward",
        cp.map(residuation::operator_adjointness_backward),
    );
    case(
        "divisible-operator",
        cp.map(residuation::operator_divisibility),
    );
    out
}

/// The parity corpus.
pub fn parity_corpus() -> Vec<(&'static str, posetres::Structure)> {
    use posetres::builtins;
    vec![
        ("fig1", builtins::fig1().into()),
        ("fig2", builtins::fig2().into()),
        ("p6", builtins::p6().into()),
        ("n5", builtins::n5().into()),
        ("boolean8", builtins::boolean8().into()),
        ("fig1xp6", builtins::fig1_x_p6().into()),
    ]
}

/// Checks the implications between modularity notions on every enumerated
/// poset with at most `max_n` elements, and on all complementations of the
/// bounded ones. Returns (structures examined, violations).
pub fn implication_battery(max_n: usize) -> (usize, Vec<String>) {
    use posetres::completion::completion_modularity_report;
    use posetres::props;
    use posetres::search::{enumerate_complementations, enumerate_posets};
    use rayon::prelude::*;

    let posets: Vec<Poset> = (1..=max_n)
        .flat_map(|n| enumerate_posets(n, false).unwrap())
        .collect();
    let results: Vec<(usize, Vec<String>)> = posets
        .par_iter()
        .map(|p| {
            let mut bad = Vec::new();
            let name = || format!("{:?}", p.covers());
            let modular = props::is_modular_poset(p).holds();
            let strongly = props::is_strongly_modular(p).holds();
            let strictly = props::is_strictly_modular(p).holds();
            let distributive = props::is_distributive_poset(p).holds();
            let report = completion_modularity_report(p);
            if strongly && !modular {
                bad.push(format!("strongly modular but not modular: {}", name()));
            }
            if strictly && !modular {
                bad.push(format!("strictly modular but not modular: {}", name()));
            }
            if distributive && !modular {
                bad.push(format!("distributive but not modular: {}", name()));
            }
            if report.d0_modular.holds() && !strongly {
                bad.push(format!("D0 modular but not strongly modular: {}", name()));
            }
            if report.d_modular.holds() && !strictly {
                bad.push(format!("D modular but not strictly modular: {}", name()));
            }
            let mut seen = 1;
            if p.is_bounded() {
                for cp in enumerate_complementations(p).unwrap() {
                    seen += 1;
                    let ortho = props::is_ortholattice(&cp)
                        .map(|v| v.holds())
                        .unwrap_or(false);
                    let modular_lattice = props::is_modular_lattice(p)
                        .map(|v| v.holds())
                        .unwrap_or(false);
                    if ortho
                        && modular_lattice
                        && !props::is_orthomodular_lattice(&cp).unwrap().holds()
                    {
                        bad.push(format!(
                            "modular ortholattice not orthomodular: {} with {:?}",
                            name(),
                            cp.comp_map()
                        ));
                    }
                }
            }
            (seen, bad)
        })
        .collect();
    let seen = results.iter().map(|r| r.0).sum();
    (seen, results.into_iter().flat_map(|r| r.1).collect())
}
