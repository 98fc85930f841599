//! Shared fixtures for the integration tests.
#![allow(dead_code)]

/// `(j, dim P_{j+1}, multiplicity of the trivial module in V_{j+1})` for `1 <= j <= 43`.
pub const PRIMARY_TABLE: [(i64, &str, u64); 43] = [
    (1, "196883", 1),
    (2, "21296876", 1),
    (3, "842609326", 2),
    (4, "19360062527", 2),
    (5, "312092484374", 4),
    (6, "3898575000125", 4),
    (7, "40071789624999", 7),
    (8, "352582733780823", 8),
    (9, "2730312616406501", 12),
    (10, "18989796260093750", 14),
    (11, "120472350229297625", 22),
    (12, "705579405073375001", 25),
    (13, "3851890223522607078", 36),
    (14, "19754724655128969898", 44),
    (15, "95796047847905125001", 61),
    (16, "441630416897735940875", 74),
    (17, "1944474605043319578125", 102),
    (18, "8208966820642976271948", 124),
    (19, "33342403696070463426523", 167),
    (20, "130682291183967925390625", 206),
    (21, "495541230687128562902875", 271),
    (22, "1822158321664159999078124", 335),
    (23, "6510652458052884364952274", 440),
    (24, "22645881565834844801406026", 542),
    (25, "76805694478383734573046875", 701),
    (26, "254378447193404062648279992", 870),
    (27, "823820250669449124864265625", 1115),
    (28, "2612037978193398885792057928", 1381),
    (29, "8117168463824355581684218453", 1762),
    (30, "24748559924646442300596578125", 2180),
    (31, "74100585128385505089520426375", 2763),
    (32, "218068784814065333189473046875", 3422),
    (33, "631263434817949765287221989496", 4310),
    (34, "1798839455374997664745734472049", 5333),
    (35, "5049345338644493766280585734376", 6697),
    (36, "13970568011333638480233896790625", 8272),
    (37, "38122902172895468426986907453125", 10342),
    (38, "102657396484068599392862170371503", 12773),
    (39, "272929768681646094007878106129219", 15913),
    (40, "716766590714096093408391800296876", 19624),
    (41, "1860234399965047844989826549991625", 24386),
    (42, "4773156795988402310139116350828125", 30034),
    (43, "12113398911563006366044489650277199", 37219),
];
