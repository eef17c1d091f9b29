#pragma once
// Hilbert-square table rows; kept byte-identical to data/hilb2.csv.

namespace terminvar::detail {

inline constexpr const char *hilb2_csv = R"csv(group_id,alias,rank,perm_degree,generators,expected_N2,expected_b2,expected_pi1
"2,1",C2,15,2,(1 2),1,16,{1}
"4,1",C4,9,4,(1 2 3 4),1,10,C2
"4,2",C2^2,11,4,(1 2); (3 4),3,14,{1}
"6,1",S3,9,3,(1 2 3); (1 2),1,10,{1}
"6,2",C6,7,6,(1 2 3 4 5 6),1,8,C3
"8,1",C8,5,8,(1 2 3 4 5 6 7 8),1,6,C4
"8,2",C2xC4,7,6,(1 2 3 4); (5 6),3,10,C2
"8,3",D4,8,4,(1 2 3 4); (1 3),3,11,{1}
"8,4",Q8,6,8,(1 3 5 7)(2 8 6 4); (1 2 5 6)(3 4 7 8),1,7,C2^2
"8,5",C2^3,9,6,(1 2); (3 4); (5 6),7,16,{1}
"10,1",D5,7,5,(1 2 3 4 5); (2 5)(3 4),1,8,{1}
"12,1",BD12,5,7,(1 2 3); (2 3)(4 5 6 7),1,6,S3
"12,3",A4,7,4,(1 2 3); (1 2)(3 4),1,8,C3
"12,4",D6,7,6,(1 2 3 4 5 6); (1 6)(2 5)(3 4),3,10,{1}
"12,5",C2xC6,5,8,(1 2 3 4 5 6); (7 8),3,8,C3
"16,2",C4^2,5,8,(1 2 3 4); (5 6 7 8),3,8,C2^2
"16,3",C2^2⋊C4,6,8,(1 2); (3 4); (1 3)(2 4)(5 6 7 8),5,11,C2
"16,6",M4(2),4,8,(1 2 3 4 5 6 7 8); (2 6)(4 8),2,6,C4
"16,8",Q8⋊C2,5,8,(1 2 3 4 5 6 7 8); (2 4)(3 7)(6 8),2,7,C2
"16,9",Q16,4,16,(1 3 5 7 9 11 13 15)(2 16 14 12 10 8 6 4); (1 2 9 10)(3 4 11 12)(5 6 13 14)(7 8 15 16),1,5,D4
"16,11",C2xD4,7,6,(1 2 3 4); (1 3); (5 6),7,14,{1}
"16,12",C2xQ8,5,10,(1 3 5 7)(2 8 6 4); (1 2 5 6)(3 4 7 8); (9 10),3,8,C2^2
"16,13",C4∘D4,6,8,(1 2)(3 4)(5 6)(7 8); (2 6)(4 8); (1 3 5 7)(2 4 6 8),4,10,{1}
"16,14",C2^4,8,8,(1 2); (3 4); (5 6); (7 8),15,23,{1}
"18,3",C3xS3,5,6,(1 2 3); (1 2); (4 5 6),1,6,C3
"18,4",C3⋊S3,7,9,(1 4 7)(2 5 8)(3 6 9); (1 2 3)(4 5 6)(7 8 9); (2 3)(4 7)(5 9)(6 8),1,8,{1}
"20,3",C5⋊C4,5,5,(1 2 3 4 5); (2 3 5 4),1,6,C2
"24,3",Q8⋊C3,4,8,(1 4 7)(2 8 5); (1 6 2 3)(4 7 8 5),1,5,A4
"24,8",C3⋊D4,5,7,(5 6 7); (1 2 3 4)(6 7); (1 3),3,8,{1}
"24,12",S4,6,4,(1 2 3 4); (1 2),2,8,{1}
"24,13",C2xA4,5,6,(1 2 3); (1 2)(3 4); (5 6),3,8,C3
"32,6",C2^3⋊C4,5,,,5,10,C2
"32,7",C4.D4,4,,,4,8,C2
"32,11",C4≀C2,4,8,(1 2 3 4); (1 5)(2 6)(3 7)(4 8),3,7,C2
"32,27",C2^2≀C2,6,8,(1 2); (3 4); (1 5)(2 6)(3 7)(4 8),10,16,{1}
"32,31",C4.4D4,5,,,5,10,C2
"32,44",C8.C2^2,4,,,3,7,C2
"32,49",D4∘D4,6,8,(1 3)(2 4)(5 7)(6 8); (3 7)(4 8); (1 2)(3 4)(5 6)(7 8); (2 6)(4 8),10,16,{1}
"36,9",C3^2⋊C4,5,9,(1 4 7)(2 5 8)(3 6 9); (1 2 3)(4 5 6)(7 8 9); (2 7 3 4)(5 8 9 6),1,6,C2
"36,10",S3^2,5,6,(1 2 3); (1 2); (4 5 6); (4 5),3,8,{1}
"36,11",C3xA4,5,7,(1 2 3); (1 2)(3 4); (5 6 7),1,6,C3^2
"48,3",C4^2⋊C3,5,16,(1 5 9 13)(2 6 10 14)(3 7 11 15)(4 8 12 16); (1 2 3 4)(5 6 7 8)(9 10 11 12)(13 14 15 16); (2 16 5)(3 11 9)(4 6 13)(7 12 8)(10 14 15),1,6,A4
"48,29",Q8⋊S3,4,8,(1 4 7)(2 8 5); (1 6 2 3)(4 7 8 5); (3 6)(4 7)(5 8),2,6,{1}
"48,30",A4⋊C4,4,8,(1 2 3); (1 2)(3 4); (1 2)(5 6 7 8),3,7,S3
"48,48",C2xS4,5,6,(1 2 3 4); (1 2); (5 6),5,10,{1}
"48,49",C2^2xA4,4,8,(1 2 3); (1 2)(3 4); (5 6); (7 8),7,11,C3
"48,50",C2^2⋊A4,6,16,(1 5)(2 6)(3 7)(4 8)(9 13)(10 14)(11 15)(12 16); (1 2)(3 4)(5 6)(7 8)(9 10)(11 12)(13 14)(15 16); (1 9)(2 10)(3 11)(4 12)(5 13)(6 14)(7 15)(8 16); (1 3)(2 4)(5 7)(6 8)(9 11)(10 12)(13 15)(14 16); (2 3 4)(5 9 13)(6 11 16)(7 12 14)(8 10 15),5,11,C3
"60,5",A5,5,5,(1 2 3 4 5); (1 2 3),1,6,{1}
"64,32",C2≀C4,4,8,(1 2); (1 3 5 7)(2 4 6 8),6,10,C2
"64,35",C4^2⋊3C4,4,,,4,8,C2^2
"64,136",D4.9D4,4,,,6,10,C2
"64,138",C2≀C2^2,5,8,(1 2); (1 3)(2 4)(5 7)(6 8); (1 5)(2 6)(3 7)(4 8),9,14,{1}
"64,242",C2^4⋊C2^2,5,,,9,14,{1}
"72,40",S3≀C2,4,6,(1 2 3); (1 2); (1 4)(2 5)(3 6),3,7,{1}
"72,41",C3^2⋊Q8,4,9,(1 4 7)(2 5 8)(3 6 9); (1 2 3)(4 5 6)(7 8 9); (2 7 3 4)(5 8 9 6); (2 6 3 8)(4 5 7 9),1,5,C2^2
"72,43",C3⋊S4,5,7,(1 2 3); (4 5 6); (4 5)(6 7); (1 2)(4 5),2,7,{1}
"80,49",C2^4⋊C5,4,16,(1 2)(3 4)(5 6)(7 8)(9 10)(11 12)(13 14)(15 16); (1 3)(2 4)(5 7)(6 8)(9 11)(10 12)(13 15)(14 16); (1 5)(2 6)(3 7)(4 8)(9 13)(10 14)(11 15)(12 16); (1 9)(2 10)(3 11)(4 12)(5 13)(6 14)(7 15)(8 16); (2 9 13 11 16)(3 4 12 8 14)(5 7 6 15 10),3,7,C5
"96,64",C4^2⋊S3,4,,,2,6,{1}
"96,70",C2^4⋊C6,4,,,4,8,C3
"96,195",A4⋊D4,4,,,6,10,{1}
"96,204",C2^3⋊A4,4,,,4,8,C3
"96,227",C2^2⋊S4,5,,,5,10,{1}
"120,34",S5,4,5,(1 2 3 4 5); (1 2),2,6,{1}
"128,931",C4^2⋊5D4,4,,,7,11,{1}
"144,184",A4^2,4,8,(1 2 3); (1 2)(3 4); (5 6 7); (5 6)(7 8),3,7,C3^2
"160,234",C2^4⋊D5,4,16,(1 2)(3 4)(5 6)(7 8)(9 10)(11 12)(13 14)(15 16); (1 3)(2 4)(5 7)(6 8)(9 11)(10 12)(13 15)(14 16); (1 5)(2 6)(3 7)(4 8)(9 13)(10 14)(11 15)(12 16); (1 9)(2 10)(3 11)(4 12)(5 13)(6 14)(7 15)(8 16); (2 9 13 11 16)(3 4 12 8 14)(5 7 6 15 10); (3 4)(5 6)(9 16)(10 15)(11 13)(12 14),4,8,{1}
"168,42",GL3(F2),4,7,(2 6)(3 7); (1 4 2)(3 5 6),1,5,{1}
"192,955",C2^4⋊D6,4,,,6,10,{1}
"192,1023",C4^2⋊A4,5,,,3,8,C3
"192,1493",C2^3⋊S4,4,,,6,10,{1}
"288,1026",A4⋊S4,4,8,(1 2 3); (1 2)(3 4); (5 6 7); (5 6)(7 8); (1 2)(5 6),4,8,{1}
"360,118",A6,4,6,(1 2 3 4 5); (4 5 6),1,5,{1}
"384,18135",F384,4,,,4,8,{1}
"960,11357",M20,4,16,(1 5)(2 6)(3 7)(4 8)(9 13)(10 14)(11 15)(12 16); (1 2)(3 4)(5 6)(7 8)(9 10)(11 12)(13 14)(15 16); (1 9)(2 10)(3 11)(4 12)(5 13)(6 14)(7 15)(8 16); (1 3)(2 4)(5 7)(6 8)(9 11)(10 12)(13 15)(14 16); (2 6)(3 11)(4 16)(7 15)(8 12)(10 14); (2 10)(3 15)(4 8)(6 14)(7 11)(12 16); (5 6)(7 8)(9 11)(10 12)(13 16)(14 15); (5 7)(6 8)(9 12)(10 11)(13 14)(15 16),2,6,{1}
)csv";

} // namespace terminvar::detail
