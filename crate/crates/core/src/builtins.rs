//! Named example structures.

use crate::complement::{ComplementedPoset, Structure};
use crate::format;
use crate::poset::Poset;

/// Modular lattice of length 3 with an involutive complementation that is
/// not antitone.
pub const FIG1: &str = "\
elements: 0 a b c d c' d' b' a' 1
covers: 0<a 0<b 0<c 0<d a<c' a<d' a<b' b<c' b<a' c<a' c<d' d<a' d<b' c'<1 d'<1 b'<1 a'<1
complement: 0:1 a:a' b:b' c:c' d:d' c':c d':d b':b a':a 1:0
";

/// Twelve-element orthoposet that is not a lattice.
pub const FIG2: &str = "\
elements: 0 a b c d e e' d' c' b' a' 1
covers: 0<a 0<b 0<c 0<d a<e a<b' b<e b<a' c<e' c<d' d<e' d<c' e<d' e<c' e'<a' e'<b' a'<1 b'<1 c'<1 d'<1
complement: 0:1 a:a' b:b' c:c' d:d' e:e' e':e d':d c':c b':b a':a 1:0
";

/// Six-element distributive poset that is not a lattice; admits no
/// complementation.
pub const P6: &str = "\
elements: 0 a b c d 1
covers: 0<a 0<b a<c a<d b<c b<d c<1 d<1
";

/// The eight-element Boolean algebra; `x'` is the Boolean complement.
pub const BOOLEAN8: &str = "\
elements: 0 a b c c' b' a' 1
covers: 0<a 0<b 0<c a<c' a<b' b<c' b<a' c<b' c<a' c'<1 b'<1 a'<1
complement: 0:1 a:a' b:b' c:c' c':c b':b a':a 1:0
";

/// The pentagon, with one of its complementations.
pub const N5: &str = "\
elements: 0 a b c 1
covers: 0<a a<c c<1 0<b b<1
complement: 0:1 a:b b:a c:b 1:0
";

/// The diamond.
pub const M3: &str = "\
elements: 0 a b c 1
covers: 0<a 0<b 0<c a<1 b<1 c<1
complement: 0:1 a:b b:c c:a 1:0
";

pub const CHAIN2: &str = "\
elements: 0 1
covers: 0<1
complement: 0:1 1:0
";

/// Names accepted by [`by_name`].
pub const NAMES: &[&str] = &[
    "fig1",
    "fig2",
    "p6",
    "fig1xfig2",
    "fig1xp6",
    "boolean8",
    "n5",
    "m3",
    "chain2",
];

fn complemented(src: &str) -> ComplementedPoset {
    match format::parse(src).expect("builtin parses") {
        Structure::Complemented(cp) => cp,
        Structure::Plain(_) => unreachable!("builtin carries a complement"),
    }
}

pub fn fig1() -> ComplementedPoset {
    complemented(FIG1)
}

pub fn fig2() -> ComplementedPoset {
    complemented(FIG2)
}

pub fn p6() -> Poset {
    format::parse(P6).expect("builtin parses").poset().clone()
}

pub fn boolean8() -> ComplementedPoset {
    complemented(BOOLEAN8)
}

pub fn n5() -> ComplementedPoset {
    complemented(N5)
}

pub fn m3() -> ComplementedPoset {
    complemented(M3)
}

pub fn chain2() -> ComplementedPoset {
    complemented(CHAIN2)
}

pub fn fig1_x_fig2() -> ComplementedPoset {
    fig1().direct_product(&fig2())
}

pub fn fig1_x_p6() -> Poset {
    fig1().poset().direct_product(&p6())
}

pub fn by_name(name: &str) -> Option<Structure> {
    Some(match name {
        "fig1" => fig1().into(),
        "fig2" => fig2().into(),
        "p6" => p6().into(),
        "fig1xfig2" => fig1_x_fig2().into(),
        "fig1xp6" => fig1_x_p6().into(),
        "boolean8" => boolean8().into(),
        "n5" => n5().into(),
        "m3" => m3().into(),
        "chain2" => chain2().into(),
        _ => return None,
    })
}
