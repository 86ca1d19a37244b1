//! String and band modules as matrices, with Hom, Ext and the translate.

use affstr::linalg::q as rat;
use affstr::modules::{ar_translate_inv, band_module, ext1_dim, hom_dim, string_module};
use affstr::quiver::Quiver;
use affstr::strings::{standard_band, Band, BasicStrings};

fn main() -> affstr::Result<()> {
    let q = Quiver::parse(2, "LR")?;
    let b = BasicStrings::new(&q);
    let p1 = &b.p[1];
    let m = string_module(&q, p1);
    println!("P1 = M_{}: dims {:?}", p1.format(&q), m.dims);
    println!("{}", serde_json::to_string_pretty(&m.to_json()).unwrap());

    let tm = ar_translate_inv(&b, p1)?;
    let n = string_module(&q, &tm);
    println!("tau^-1 P1 = M_{}, rank {}", tm.format(&q), tm.rank_vector(&q)?);
    println!("Hom(P1, tau^-1 P1) = {}", hom_dim(&m, &n));
    println!("Ext1(tau^-1 P1, P1) = {}", ext1_dim(&q, &n, &m));

    let (band, _) = Band::new(&q, standard_band(&q))?;
    let bm = band_module(&q, &band, &rat(3), 2)?;
    println!("M_(b,3,2) for b = {}: dims {:?}", band.format(&q), bm.dims);
    println!("End = {}, Ext1 = {}", hom_dim(&bm, &bm), ext1_dim(&q, &bm, &bm));
    Ok(())
}
