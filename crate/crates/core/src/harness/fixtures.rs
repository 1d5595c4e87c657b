use super::{parse_bfile, ANumber, SequenceRecord};

macro_rules! bundled {
    ($($a:literal => $file:literal),* $(,)?) => {
        const BUNDLED: &[(&str, &str)] = &[
            $(($a, include_str!(concat!("../../data/fixtures/", $file)))),*
        ];
    };
}

bundled! {
    "A003001" => "b003001.txt",
    "A006960" => "b006960.txt",
    "A033865" => "b033865.txt",
    "A051003" => "b051003.txt",
    "A057641" => "b057641.txt",
    "A090822" => "b090822.txt",
    "A094004" => "b094004.txt",
    "A131744" => "b131744.txt",
    "A133242" => "b133242.txt",
    "A134204" => "b134204.txt",
    "A135385" => "b135385.txt",
    "A135473" => "b135473.txt",
}

/// Every bundled fixture, in A-number order.
pub fn fixtures() -> Vec<SequenceRecord> {
    BUNDLED
        .iter()
        .map(|(a, text)| parse_bfile(text, a.parse().expect("valid A-number")).expect("bundled fixture parses"))
        .collect()
}

pub fn fixture(a_number: ANumber) -> Option<SequenceRecord> {
    let key = a_number.to_string();
    BUNDLED
        .iter()
        .find(|(a, _)| *a == key)
        .map(|(_, text)| parse_bfile(text, a_number).expect("bundled fixture parses"))
}
