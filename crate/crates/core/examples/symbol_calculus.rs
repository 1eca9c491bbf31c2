//! Symbols, shifts, canonical classes and the bipartition bridge.
//!
//! cargo run --example symbol_calculus

use almost_special::symbols::{sym, Bipartition, Symbol};

fn main() -> anyhow::Result<()> {
    let s = sym("0 1 2 3 4 / 2 3 4 5 6");
    println!("symbol        {s}");
    println!("rank          {}", s.rank()?);
    println!("shifted       {}", s.shift_up());
    println!("reduced       {}", s.shift_up().reduce()?);
    println!("swapped class {}", s.swapped().canonical()?);
    println!("degenerate    {}", s.is_degenerate());

    let b = s.to_bipartition();
    println!("bipartition   alpha={:?} beta={:?}", b.alpha(), b.beta());

    let d = Symbol::from_bipartition(&Bipartition::new(vec![2], vec![2])?);
    println!("(2),(2)       {d}  rank {} degenerate {}", d.rank()?, d.is_degenerate());

    let json = serde_json::to_string(&s)?;
    println!("json          {json}");
    let back: Symbol = serde_json::from_str(&json)?;
    assert_eq!(back, s);
    Ok(())
}
