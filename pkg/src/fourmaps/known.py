"""Published counts of 4-regular one-face maps, ``genus -> (rooted, unrooted)``."""

KNOWN_COUNTS: dict[int, tuple[int, int]] = {
    1: (1, 1),
    2: (45, 6),
    3: (9450, 510),
    4: (4729725, 169772),
    5: (4341887550, 120644422),
    6: (6352181485650, 144369379620),
    7: (13566444744352500, 260893265836244),
    8: (39834473380605028125, 663907896121296616),
    9: (153946961458244898693750, 2263925904300525582790),
    10: (757572997336023146471943750, 9968065754464730977513732),
    11: (4625189759553876588251163487500, 55061782851836038471634743076),
    12: (34307345041490879593353005168531250, 372905924364031740449809951518408),
    13: (303883906271359598859584503473567187500, 3038839062713596039129776983675546524),
    14: (3168250194798584983481619521143486701562500, 29335649951838749853328539549957507066456),
    15: (
        38405528861348447169764191835301345796340625000,
        331082145356452130774665205463914398071175024,
    ),
}
