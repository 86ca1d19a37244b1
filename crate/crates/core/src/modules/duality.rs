use crate::quiver::{Letter, Quiver};
use crate::strings::{Band, StringWord};

/// The same quiver with every arrow reversed.
pub fn opposite_quiver(q: &Quiver) -> Quiver {
    let omega = (1..=q.n()).map(|j| -q.omega(j)).collect();
    Quiver::new(q.n(), omega).expect("same rank")
}

fn flip(letters: &[Letter]) -> Vec<Letter> {
    letters.iter().map(|x| x.inverted()).collect()
}

/// The string over the opposite quiver whose module is the dual of `M_w`.
pub fn dual_word(q: &Quiver, w: &StringWord) -> StringWord {
    match w.trivial_data() {
        Some(t) => StringWord::trivial(t.vertex, t.positive),
        None => StringWord::new(&opposite_quiver(q), flip(w.letters())).expect("duality keeps validity"),
    }
}

/// The band over the opposite quiver, with the flag of [`Band::new`].
pub fn dual_band(q: &Quiver, b: &Band) -> (Band, bool) {
    Band::new(&opposite_quiver(q), flip(b.letters())).expect("duality keeps validity")
}
