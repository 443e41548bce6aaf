//! Writing a brace to JSON, reading it back and analyzing it.

use braceforge::families::{family1_data, Family1Params};
use braceforge::io::{BraceFile, Provenance};

fn main() -> braceforge::Result<()> {
    let params = Family1Params::new(3, 2, 2, 1, 1)?;
    let data = family1_data(&params)?;
    let br = data.build()?;
    let text = BraceFile::from_brace(&br, Some(Provenance::bicrossed((&params).into(), &data))).to_json();
    println!("{} bytes of JSON", text.len());

    let file = BraceFile::from_json(&text)?;
    assert_eq!(file.to_json(), text);
    let report = file.to_brace()?.analyze(&file.subsets());
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(())
}
