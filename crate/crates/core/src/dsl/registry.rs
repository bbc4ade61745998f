use super::{parse, Formula};

/// Named formulas: the displayed identities and quasi-identities.
pub const BUILTINS: &[(&str, &str)] = &[
    (
        "modular",
        "forall x y z where x <= z : L(U(x,y),z) = LU(x,L(y,z))",
    ),
    (
        "distributive-1",
        "forall x y z : L(U(x,y),z) = LU(L(x,z),L(y,z))",
    ),
    (
        "distributive-2",
        "forall x y z : LU(L(x,y),z) = L(U(x,z),U(y,z))",
    ),
    (
        "strongly-modular-1",
        "forall x y z : L(U(x,y),U(x,z)) = LU(x,L(y,U(x,z)))",
    ),
    (
        "strongly-modular-2",
        "forall x y z : L(U(L(x,z),y),z) = LU(L(x,z),L(y,z))",
    ),
    (
        "modular-lattice",
        "forall x y z : (x v y) ^ (x v z) = x v (y ^ (x v z))",
    ),
    (
        "orthomodular-law",
        "forall x y : x v ((x v y) ^ x') = x v y",
    ),
    ("involution", "forall x : x'' = x"),
    ("antitone", "forall x y where x <= y : L(y') <= L(x')"),
    ("complementation-meet", "forall x : L(x,x') = L(0)"),
    ("complementation-join", "forall x : U(x,x') = U(1)"),
    (
        "adjointness-lattice-forward",
        "forall x y z where (x v y') ^ y <= z : L(x) <= L((y ^ z) v y')",
    ),
    (
        "adjointness-lattice-backward",
        "forall x y z where x <= (y ^ z) v y' : L((x v y') ^ y) <= L(z)",
    ),
    (
        "divisible-lattice",
        "forall x y : ((((x ^ y) v x') v x') ^ x) = x ^ y",
    ),
    (
        "adjointness-operator-forward",
        "forall x y z where M(x,y) <= z : L(x) <= R(y,z)",
    ),
    (
        "adjointness-operator-backward",
        "forall x y z where x <= U(R(y,z)) : M(x,y) <= L(z)",
    ),
    ("divisible-operator", "forall x y : M(R(x,y),x) = L(x,y)"),
    ("m-unit-right", "forall x : M(x,1) = L(x)"),
    ("m-unit-left", "forall x : M(1,x) = L(x)"),
    ("r-zero", "forall x : R(x,0) = L(x')"),
    ("boolean-m", "forall x y : M(x,y) = L(x,y)"),
    ("boolean-r", "forall x y : R(x,y) = LU(x',y)"),
];

/// Looks up and parses a registry formula.
pub fn builtin(name: &str) -> Option<Formula> {
    BUILTINS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, src)| parse(src).expect("registry formulas parse"))
}
