h = -484335370397555869540982096 t^2 + 21745428828566997697489 t - 184765518741585604 W + 22709411000816400
