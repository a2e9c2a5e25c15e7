//! 256-layer ziggurat for standard normal variates.
//!
//! A variate is a signed 51-bit integer times a per-layer width, with the
//! low 8 bits of the integer selecting the layer. Outputs therefore lie on a
//! per-layer lattice rather than having uniformly random low-order bits.
//! Ulp-level error rates of downstream kernels depend on this structure.
//!
//! Tables were computed once at 60 significant digits and are frozen here so
//! that sampling does not depend on the platform's `exp` and `ln` outside
//! the rare wedge and tail tests.

use rand::RngCore;

/// Right edge of the base strip.
#[allow(clippy::excessive_precision)]
const R: f64 = 3.6541528853610088;

/// Draws one standard normal variate.
pub(super) fn standard_normal<G: RngCore>(rng: &mut G) -> f64 {
    loop {
        let bits = rng.next_u64() >> 12;
        let magnitude = (bits >> 1) as i64;
        let layer = (magnitude & 0xff) as usize;
        let signed = if bits & 1 == 1 { -magnitude } else { magnitude };
        let x = signed as f64 * W[layer];
        if (magnitude as u64) < K[layer] {
            return x;
        }
        if layer == 0 {
            return tail(rng, bits & 1 == 1);
        }
        let y = F[layer] + open_unit(rng) * (F[layer + 1] - F[layer]);
        if y < (-0.5 * x * x).exp() {
            return x;
        }
    }
}

/// Uniform in `(0, 1]`.
fn open_unit<G: RngCore>(rng: &mut G) -> f64 {
    ((rng.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Marsaglia's method for `|x| > R`.
fn tail<G: RngCore>(rng: &mut G, negative: bool) -> f64 {
    loop {
        let x = -open_unit(rng).ln() / R;
        let y = -open_unit(rng).ln();
        if y + y > x * x {
            return if negative { -(R + x) } else { R + x };
        }
    }
}

pub(super) const W: [f64; 256] = [
    1.7367254121656703e-15,
    1.6227698675312968e-15,
    1.531787274160907e-15,
    1.4744848603594667e-15,
    1.4319989869657897e-15,
    1.3979436672771461e-15,
    1.3693606835124475e-15,
    1.3446300925006917e-15,
    1.3227655770190893e-15,
    1.3031206634685398e-15,
    1.2852479319091384e-15,
    1.268824481425016e-15,
    1.2536093926597603e-15,
    1.2394179789158183e-15,
    1.2261054417445396e-15,
    1.2135560818661637e-15,
    1.201675939253847e-15,
    1.1903876299277459e-15,
    1.179626635295029e-15,
    1.1693385786905373e-15,
    1.1594771891443527e-15,
    1.150002753783406e-15,
    1.1408809242576976e-15,
    1.1320817840158973e-15,
    1.1235791107104895e-15,
    1.1153497865847152e-15,
    1.1073733224929686e-15,
    1.09963147017795e-15,
    1.0921079038143372e-15,
    1.0847879564397177e-15,
    1.07765840026618e-15,
    1.0707072623626628e-15,
    1.0639236690670377e-15,
    1.057297713900341e-15,
    1.0508203448348659e-15,
    1.0444832675993878e-15,
    1.0382788623508751e-15,
    1.0322001115479755e-15,
    1.026240537260681e-15,
    1.0203941464676316e-15,
    1.0146553831460223e-15,
    1.0090190861630543e-15,
    1.0034804521429213e-15,
    9.980350026176626e-16,
    9.926785548800904e-16,
    9.874071960473548e-16,
    9.822172599183368e-16,
    9.771053062699983e-16,
    9.72068102289435e-16,
    9.671026058815726e-16,
    9.62205950628746e-16,
    9.57375432209002e-16,
    9.5260849610588e-16,
    9.479027264644209e-16,
    9.432558359669126e-16,
    9.38665656617903e-16,
    9.341301313417584e-16,
    9.296473063078686e-16,
    9.252153239087913e-16,
    9.208324163254476e-16,
    9.164968996211253e-16,
    9.122071683126914e-16,
    9.079616903732087e-16,
    9.037590026252085e-16,
    8.995977064883017e-16,
    8.954764640486935e-16,
    8.913939944215902e-16,
    8.8734907038049e-16,
    8.833405152300122e-16,
    8.793671999012706e-16,
    8.754280402508787e-16,
    8.715219945465259e-16,
    8.676480611237092e-16,
    8.6380527619967175e-16,
    8.599927118319072e-16,
    8.562094740097588e-16,
    8.5245470086869e-16,
    8.487275610177406e-16,
    8.450272519715296e-16,
    8.413529986789175e-16,
    8.377040521411316e-16,
    8.34079688112767e-16,
    8.304792058796362e-16,
    8.269019271079405e-16,
    8.233471947596931e-16,
    8.198143720697359e-16,
    8.163028415800651e-16,
    8.12812004227522e-16,
    8.093412784812165e-16,
    8.058900995263265e-16,
    8.024579184911813e-16,
    7.990442017147628e-16,
    7.956484300519808e-16,
    7.922700982142658e-16,
    7.889087141432085e-16,
    7.855637984151357e-16,
    7.822348836746627e-16,
    7.78921514095401e-16,
    7.756232448661274e-16,
    7.723396417008341e-16,
    7.690702803711903e-16,
    7.658147462600412e-16,
    7.625726339346621e-16,
    7.593435467385694e-16,
    7.561270964007667e-16,
    7.529229026613742e-16,
    7.497305929126601e-16,
    7.465498018545449e-16,
    7.433801711637146e-16,
    7.402213491755235e-16,
    7.370729905779203e-16,
    7.339347561166714e-16,
    7.308063123111988e-16,
    7.2768733118038725e-16,
    7.245774899777502e-16,
    7.214764709353755e-16,
    7.183839610161045e-16,
    7.152996516734219e-16,
    7.122232386185626e-16,
    7.091544215943653e-16,
    7.060929041554193e-16,
    7.030383934540792e-16,
    6.999906000319335e-16,
    6.96949237616333e-16,
    6.939140229215998e-16,
    6.908846754545526e-16,
    6.878609173239948e-16,
    6.848424730538249e-16,
    6.81829069399439e-16,
    6.788204351671041e-16,
    6.758163010359885e-16,
    6.728163993825439e-16,
    6.698204641069389e-16,
    6.668282304612498e-16,
    6.638394348791179e-16,
    6.608538148065851e-16,
    6.578711085338253e-16,
    6.548910550274845e-16,
    6.519133937633505e-16,
    6.48937864559066e-16,
    6.45964207406601e-16,
    6.429921623041988e-16,
    6.40021469087503e-16,
    6.370518672595733e-16,
    6.340830958194888e-16,
    6.311148930892342e-16,
    6.281469965385542e-16,
    6.251791426074554e-16,
    6.222110665260248e-16,
    6.192425021312213e-16,
    6.162731816802865e-16,
    6.133028356604082e-16,
    6.103311925942512e-16,
    6.073579788409578e-16,
    6.043829183921996e-16,
    6.01405732662843e-16,
    5.98426140275769e-16,
    5.954438568403615e-16,
    5.924585947241581e-16,
    5.89470062817121e-16,
    5.864779662879593e-16,
    5.834820063319006e-16,
    5.804818799092685e-16,
    5.774772794741848e-16,
    5.744678926926726e-16,
    5.714534021493849e-16,
    5.684334850421336e-16,
    5.654078128633358e-16,
    5.623760510674315e-16,
    5.593378587232605e-16,
    5.562928881503102e-16,
    5.532407845376661e-16,
    5.50181185544408e-16,
    5.471137208800966e-16,
    5.440380118638932e-16,
    5.409536709607314e-16,
    5.378603012928409e-16,
    5.347574961247755e-16,
    5.316448383199491e-16,
    5.285218997665102e-16,
    5.2538824077020155e-16,
    5.222434094116442e-16,
    5.190869408652579e-16,
    5.159183566767805e-16,
    5.127371639960692e-16,
    5.095428547615612e-16,
    5.063349048324261e-16,
    5.031127730640677e-16,
    4.99875900322208e-16,
    4.966237084303158e-16,
    4.933555990446197e-16,
    4.900709524503576e-16,
    4.867691262722585e-16,
    4.834494540915173e-16,
    4.801112439606964e-16,
    4.767537768070579e-16,
    4.733763047137822e-16,
    4.69978049067346e-16,
    4.665581985579899e-16,
    4.631159070186941e-16,
    4.596502910863464e-16,
    4.5616042766683e-16,
    4.526453511835132e-16,
    4.491040505860591e-16,
    4.455354660935343e-16,
    4.419384856424202e-16,
    4.383119410062289e-16,
    4.346546035489394e-16,
    4.3096517956924877e-16,
    4.2724230518658345e-16,
    4.234845407127582e-16,
    4.1969036444492247e-16,
    4.1585816580575855e-16,
    4.119862377455137e-16,
    4.080727683070036e-16,
    4.041158312387907e-16,
    4.0011337552278087e-16,
    3.9606321365983254e-16,
    3.919630085297984e-16,
    3.878102586096749e-16,
    3.8360228129389374e-16,
    3.793361940125627e-16,
    3.7500889278448874e-16,
    3.706170277693123e-16,
    3.6615697529342477e-16,
    3.616248057128073e-16,
    3.570162463362898e-16,
    3.523266384567022e-16,
    3.4755088731390227e-16,
    3.4268340352771636e-16,
    3.37718034169968e-16,
    3.3264798116476e-16,
    3.2746570407564125e-16,
    3.221628035016365e-16,
    3.167298801818414e-16,
    3.111563633851158e-16,
    3.0543030006769113e-16,
    2.9953809336344285e-16,
    2.9346417484275224e-16,
    2.8719058903642897e-16,
    2.80696460019946e-16,
    2.739572968463095e-16,
    2.6694407473112964e-16,
    2.596219977196592e-16,
    2.5194879828681465e-16,
    2.4387234556800803e-16,
    2.3532718913376864e-16,
    2.262294039150043e-16,
    2.1646860576118966e-16,
    2.0589500627632916e-16,
    1.942972015219358e-16,
    1.8136120809053487e-16,
    1.6658733630346416e-16,
    1.4909740960986864e-16,
    1.2708704832820278e-16,
    9.558660348275145e-17,
];

pub(super) const K: [u64; 256] = [
    0x7799ec012de1b,
    0x78d2d25998d05,
    0x7b362fbf8178c,
    0x7c4fd24520ea4,
    0x7cf4b8f00a288,
    0x7d6202c151402,
    0x7db03620029ea,
    0x7deb2c0e05bf3,
    0x7e195978f1150,
    0x7e3e93766966e,
    0x7e5d46c2f08b8,
    0x7e771023b0fb0,
    0x7e8d0d3da63b9,
    0x7ea00a4f177ed,
    0x7eb09d6deb26a,
    0x7ebf377a46768,
    0x7ecc2f0d95d21,
    0x7ed7c7c170128,
    0x7ee237294df71,
    0x7eeba84e31de7,
    0x7ef43e2bf7f3e,
    0x7efc15815b8be,
    0x7f034627733c1,
    0x7f09e413c4174,
    0x7f10001ccaa95,
    0x7f15a8917f269,
    0x7f1ae9af758b8,
    0x7f1fcdffe8f06,
    0x7f245ea1b7a16,
    0x7f28a384bb92b,
    0x7f2ca399c7b8c,
    0x7f3064f9c182a,
    0x7f33ed05b55d7,
    0x7f374081550ec,
    0x7f3a63a8fb53e,
    0x7f3d5a44119cb,
    0x7f4027b48548b,
    0x7f42cf03d58e0,
    0x7f4552ee2745e,
    0x7f47b5ebb62d6,
    0x7f49fa38ea380,
    0x7f4c21dd4a3bd,
    0x7f4e2eb17ab08,
    0x7f5022646ece7,
    0x7f51fe7feb9de,
    0x7f53c46c7717f,
    0x7f557574c9117,
    0x7f5712c8d0160,
    0x7f589d8059691,
    0x7f5a169d68fba,
    0x7f5b7f0e4c28c,
    0x7f5cd7af70659,
    0x7f5e214d05b33,
    0x7f5f5ca4737d3,
    0x7f608a65a5985,
    0x7f61ab343649c,
    0x7f62bfa8798e9,
    0x7f63c8506d4a7,
    0x7f64c5b09184b,
    0x7f65b844ab744,
    0x7f66a08075bc6,
    0x7f677ed03ff04,
    0x7f6853997f30c,
    0x7f691f3b517d5,
    0x7f69e20ef51fb,
    0x7f6a9c68356e9,
    0x7f6b4e95cdfff,
    0x7f6bf8e1c5404,
    0x7f6c9b91bf4af,
    0x7f6d36e749c4e,
    0x7f6dcb2021663,
    0x7f6e587671cd2,
    0x7f6edf2110227,
    0x7f6f5f53b109e,
    0x7f6fd93f1a4ce,
    0x7f704d1150a0b,
    0x7f70baf5c1e15,
    0x7f7123156c0ea,
    0x7f71859701553,
    0x7f71e29f0960f,
    0x7f723a500034e,
    0x7f728cca72bc2,
    0x7f72da2d1942b,
    0x7f732294f0026,
    0x7f73661d4de95,
    0x7f73a4dff9be5,
    0x7f73def53dc2a,
    0x7f741473f9ee4,
    0x7f744571b4e22,
    0x7f747202aba70,
    0x7f749a39e0501,
    0x7f74be2927956,
    0x7f74dde13577b,
    0x7f74f971a8ff6,
    0x7f7510e917250,
    0x7f75245514f25,
    0x7f7533c240e75,
    0x7f753f3c4bb0d,
    0x7f7546ce00391,
    0x7f754a814b1ea,
    0x7f754a5f41980,
    0x7f75467027ce7,
    0x7f753ebb76b5e,
    0x7f753347e1699,
    0x7f75241b5a136,
    0x7f75113b16637,
    0x7f74faab939da,
    0x7f74e0709a40d,
    0x7f74c28d414d5,
    0x7f74a103f12cc,
    0x7f747bd666407,
    0x7f745305b317f,
    0x7f74269242537,
    0x7f73f67bd833a,
    0x7f73c2c193d9d,
    0x7f738b61f0399,
    0x7f73505ac4bd4,
    0x7f7311a9459f2,
    0x7f72cf4a03f7b,
    0x7f728938ed81d,
    0x7f723f714c154,
    0x7f71f1edc4d78,
    0x7f71a0a857237,
    0x7f714b9a5b26a,
    0x7f70f2bc80348,
    0x7f709606cacda,
    0x7f703570925b9,
    0x7f6fd0f07e9e0,
    0x7f6f687c84c95,
    0x7f6efc09e453e,
    0x7f6e8b8d236fd,
    0x7f6e16fa0b2fd,
    0x7f6d9e43a352d,
    0x7f6d215c2db54,
    0x7f6ca03521636,
    0x7f6c1abf25492,
    0x7f6b90ea0a7c4,
    0x7f6b02a4c61be,
    0x7f6a6fdd6ac06,
    0x7f69d88121774,
    0x7f693c7c2244f,
    0x7f689bb9ac260,
    0x7f67f623fc8a7,
    0x7f674ba446424,
    0x7f669c22a7d54,
    0x7f65e786213c8,
    0x7f652db488f50,
    0x7f646e9280621,
    0x7f63aa0367740,
    0x7f62dfe94f890,
    0x7f621024ed7ad,
    0x7f613a958accd,
    0x7f605f18f5eb6,
    0x7f5f7d8b716df,
    0x7f5e95c7a24a7,
    0x7f5da7a67ce7c,
    0x7f5cb2ff30fc6,
    0x7f5bb7a714238,
    0x7f5ab5718b114,
    0x7f59ac2ff14de,
    0x7f589bb17f5c0,
    0x7f5783c32f2d4,
    0x7f56642f9ec44,
    0x7f553cbef0e2a,
    0x7f540d36ab9be,
    0x7f52d55994a46,
    0x7f5194e78b300,
    0x7f504b9d5f2ea,
    0x7f4ef934a5b15,
    0x7f4d9d638a3db,
    0x7f4c37dc9ccf7,
    0x7f4ac84e9c419,
    0x7f494e643cd30,
    0x7f47c9c3ea71b,
    0x7f463a0f866fb,
    0x7f449ee4203cd,
    0x7f42f7d9a8b36,
    0x7f4144829f7dc,
    0x7f3f846bba0b5,
    0x7f3db71b837e1,
    0x7f3bdc11f4eaa,
    0x7f39f2c80530b,
    0x7f37faaf2fa01,
    0x7f35f330f085a,
    0x7f33dbae36a3d,
    0x7f31b37ec87b9,
    0x7f2f79f09c2be,
    0x7f2d2e472087f,
    0x7f2acfba75dae,
    0x7f285d7694a00,
    0x7f25d69a60417,
    0x7f233a36a3aff,
    0x7f20874cf561f,
    0x7f1dbcce7ff70,
    0x7f1ad99aac5fb,
    0x7f17dc7daa013,
    0x7f14c42ed0d13,
    0x7f118f4ed8d99,
    0x7f0e3c65e1f0a,
    0x7f0ac9e145b5d,
    0x7f0736112d05c,
    0x7f037f25e11a1,
    0x7effa32ccf5bf,
    0x7efba00d3592f,
    0x7ef773846a7b6,
    0x7ef31b21b4eb7,
    0x7eee9441a16c3,
    0x7ee9dc08c383f,
    0x7ee4ef5dccc23,
    0x7edfcae2dfd41,
    0x7eda6aee015dc,
    0x7ed4cb8082e04,
    0x7ecee83d3d598,
    0x7ec8bc5d694e5,
    0x7ec242a3d8302,
    0x7ebb754e47295,
    0x7eb44e0474b5e,
    0x7eacc5c4905fc,
    0x7ea4d4cc85879,
    0x7e9c727f862b2,
    0x7e93954717830,
    0x7e8a326eb605d,
    0x7e803df8ee262,
    0x7e75aa6c7f3f3,
    0x7e6a6897c1a62,
    0x7e5e674810ee3,
    0x7e5192f25ec69,
    0x7e43d54944845,
    0x7e3514bbd73d1,
    0x7e2533d712a61,
    0x7e141081bcd54,
    0x7e018307fb20a,
    0x7ded5ce820179,
    0x7dd7674d0eda0,
    0x7dbf611b379de,
    0x7da4fc6a9b47b,
    0x7d87db38c5600,
    0x7d678b069a32c,
    0x7d437ef2d9ddf,
    0x7d1b07ac0f416,
    0x7ced483edf028,
    0x7cb9263a6dc93,
    0x7c7d32bc1853e,
    0x7c37886319beb,
    0x7be5976140f60,
    0x7b83d3aa9b493,
    0x7b0d2f20db5f0,
    0x7a7a34ab06fca,
    0x79bf6b0ffb895,
    0x78ca3857ce63e,
    0x777a5c0bf110b,
    0x7592af4e97d1c,
    0x728fb3f6024d3,
    0x6d1aa7d5d210e,
    0x6045f4c795632,
    0x0000000000000,
];

pub(super) const F: [f64; 257] = [
    0.0004774677645866519,
    0.0012602859304985975,
    0.002609072746106362,
    0.0040379725933718715,
    0.005522403299264755,
    0.007050875471392109,
    0.008616582769422912,
    0.0102149714397311,
    0.0118427578579431,
    0.013497450601780796,
    0.015177088307982065,
    0.016880083152595836,
    0.018605121275783343,
    0.020351096230109344,
    0.022117062707379908,
    0.023902203305873237,
    0.02570580400863265,
    0.027527235669693315,
    0.02936593975823011,
    0.031221417192023686,
    0.033093219458688684,
    0.034980941461833046,
    0.03688421568869112,
    0.0388027074046569,
    0.04073611065607874,
    0.042684144916619336,
    0.044646552251446515,
    0.04662309490208967,
    0.04861355321603513,
    0.05061772386112175,
    0.05263541827697361,
    0.05466646132507786,
    0.056710690106399425,
    0.05876795292113793,
    0.06083810834975175,
    0.06292102443797778,
    0.06501657797147035,
    0.06712465382802392,
    0.06924514439725017,
    0.07137794905914183,
    0.07352297371424082,
    0.07568013035919481,
    0.07784933670237201,
    0.08003051581494733,
    0.0822235958134955,
    0.08442850957065445,
    0.08664519445086755,
    0.08887359206859394,
    0.09111364806670041,
    0.09336531191302634,
    0.09562853671335306,
    0.09790327903921535,
    0.10018949876917177,
    0.10248715894230599,
    0.10479622562286683,
    0.10711666777507266,
    0.10944845714720981,
    0.1117915681642454,
    0.11414597782825504,
    0.11651166562603685,
    0.11888861344334545,
    0.12127680548523516,
    0.12367622820205106,
    0.12608687022065,
    0.12850872228047336,
    0.13094177717412792,
    0.13338602969216254,
    0.13584147657175705,
    0.138308116449064,
    0.14078594981496803,
    0.14327497897404687,
    0.14577520800653765,
    0.1482866427331284,
    0.15080929068240986,
    0.15334316106083742,
    0.15588826472506426,
    0.1584446141565199,
    0.16101222343811727,
    0.1635911082329826,
    0.1661812857651097,
    0.16878277480185,
    0.17139559563815535,
    0.17401977008249914,
    0.17665532144440646,
    0.17930227452353026,
    0.18196065560021638,
    0.18463049242750437,
    0.18731181422451676,
    0.19000465167119293,
    0.19270903690432864,
    0.1954250035148854,
    0.19815258654653795,
    0.20089182249543117,
    0.20364274931112133,
    0.20640540639867916,
    0.20917983462193548,
    0.21196607630785277,
    0.2147641752520084,
    0.21757417672517823,
    0.22039612748101145,
    0.22323007576478943,
    0.22607607132326474,
    0.22893416541557743,
    0.23180441082524855,
    0.2346868618732527,
    0.23758157443217368,
    0.24048860594144916,
    0.24340801542371202,
    0.24633986350223877,
    0.2492842124195167,
    0.25224112605694377,
    0.2552106699556771,
    0.25819291133864797,
    0.2611879191337636,
    0.2641957639983174,
    0.26721651834463167,
    0.2702502563669598,
    0.27329705406967564,
    0.2763569892967811,
    0.27943014176276515,
    0.28251659308484933,
    0.28561642681665805,
    0.28872972848335393,
    0.2918565856182811,
    0.2949970878011627,
    0.29815132669790145,
    0.30131939610203423,
    0.30450139197789644,
    0.307697412505554,
    0.310907558127564,
    0.3141319315976305,
    0.3173706380312227,
    0.3206237849582305,
    0.32389148237773235,
    0.32717384281495887,
    0.3304709813805373,
    0.33378301583210873,
    0.33711006663841303,
    0.3404522570459456,
    0.3438097131482915,
    0.34718256395825153,
    0.35057094148288126,
    0.35397498080156936,
    0.3573948201472906,
    0.36083060099117586,
    0.36428246813054976,
    0.3677505697805964,
    0.37123505766982157,
    0.37473608713949164,
    0.37825381724723833,
    0.3817884108750316,
    0.38534003484173424,
    0.3889088600204649,
    0.39249506146101104,
    0.3960988185175474,
    0.399720314981932,
    0.4033597392228692,
    0.40701728433124823,
    0.41069314827198344,
    0.4143875340427069,
    0.41810064983968476,
    0.4218327092313535,
    0.42558393133990086,
    0.42935454103134185,
    0.43314476911457434,
    0.43695485254992955,
    0.4407850346677702,
    0.4446355653977281,
    0.4485067015092144,
    0.4523987068638829,
    0.45631185268077407,
    0.460246417814924,
    0.4642026890502793,
    0.46818096140782267,
    0.4721815384698837,
    0.4762047327216842,
    0.48025086591125016,
    0.48432026942891204,
    0.4884132847077125,
    0.4925302636461491,
    0.49667156905479676,
    0.5008375751284826,
    0.5050286679458292,
    0.5092452459981365,
    0.5134877207497434,
    0.5177565172322012,
    0.5220520746747954,
    0.5263748471741873,
    0.5307253044061945,
    0.5351039323830201,
    0.5395112342595453,
    0.5439477311926505,
    0.5484139632579217,
    0.5529104904285204,
    0.5574378936214867,
    0.5619967758172782,
    0.5665877632589521,
    0.5712115067380753,
    0.5758686829752109,
    0.5805599961036837,
    0.5852861792663006,
    0.5900479963357922,
    0.5948462437709915,
    0.599681752622168,
    0.6045553907005499,
    0.6094680649288958,
    0.6144207238920772,
    0.6194143606090396,
    0.6244500155502747,
    0.6295287799281287,
    0.6346517992909606,
    0.6398202774564395,
    0.6450354808242524,
    0.650298743114295,
    0.6556114705832252,
    0.6609751477802419,
    0.6663913439123812,
    0.6718617199007669,
    0.6773880362225135,
    0.6829721616487918,
    0.6886160830085275,
    0.694321916130033,
    0.7000919181404905,
    0.7059285013367979,
    0.711834248882359,
    0.717811932634902,
    0.7238645334728822,
    0.729995264565803,
    0.7362075981312672,
    0.7425052963446368,
    0.7488924472237273,
    0.7553735065117552,
    0.7619533468415471,
    0.7686373158033355,
    0.775431304986139,
    0.7823418326598627,
    0.7893761435711993,
    0.7965423304282554,
    0.8038494831763903,
    0.8113078743182208,
    0.8189291916094156,
    0.8267268339520951,
    0.8347162929929313,
    0.842915653118442,
    0.8513462584651245,
    0.8600336212030095,
    0.869008688043794,
    0.8783096558161477,
    0.8879846607634008,
    0.898095921906305,
    0.9087264400605639,
    0.9199915050483614,
    0.9320600759689914,
    0.9451989534530794,
    0.9598790918124174,
    0.9771017012827331,
    1.0,
];
