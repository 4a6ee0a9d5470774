//! The full character table modulo k, with exact root-of-unity values,
//! classes and historical labels.
//!
//! ```text
//! cargo run --example character_table -- 5
//! ```

use dirichlet::enumerate_characters;

fn main() -> dirichlet::Result<()> {
    let k: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(12);
    let chars = enumerate_characters(k)?;
    println!("{} characters modulo {k}", chars.len());
    for chi in &chars {
        let values: Vec<String> = (1..=k as i64).map(|n| chi.evaluate(n).to_string()).collect();
        println!("L{:?}  {:<16}  {}", chi.label(), chi.classify().to_string(), values.join("  "));
    }

    println!("\nas JSON:");
    println!("{}", serde_json::to_string(&chars).expect("serializable"));
    Ok(())
}
