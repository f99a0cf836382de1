"""Monte Carlo critical values of the Lilliefors-corrected KS test.

Quantiles of sqrt(n) * D under the normal null with estimated mean and
sd (ddof=1), 100000 calibration batches per sample size.  Generated by
tools/make_lilliefors_table.py; regenerate rather than edit.
"""

import numpy as np

PROBS = np.array([0.0005, 0.001, 0.002, 0.005, 0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08, 0.09, 0.1, 0.11, 0.12, 0.13, 0.14, 0.15, 0.16, 0.17, 0.18, 0.19, 0.2, 0.21, 0.22, 0.23, 0.24, 0.25, 0.26, 0.27, 0.28, 0.29, 0.3, 0.31, 0.32, 0.33, 0.34, 0.35, 0.36, 0.37, 0.38, 0.39, 0.4, 0.41, 0.42, 0.43, 0.44, 0.45, 0.46, 0.47, 0.48, 0.49, 0.5, 0.51, 0.52, 0.53, 0.54, 0.55, 0.56, 0.57, 0.58, 0.59, 0.6, 0.61, 0.62, 0.63, 0.64, 0.65, 0.66, 0.67, 0.68, 0.69, 0.7, 0.71, 0.72, 0.73, 0.74, 0.75, 0.76, 0.77, 0.78, 0.79, 0.8, 0.81, 0.82, 0.83, 0.84, 0.85, 0.86, 0.87, 0.88, 0.89, 0.9, 0.91, 0.92, 0.93, 0.94, 0.95, 0.96, 0.97, 0.98, 0.99, 0.995, 0.998, 0.999, 0.9995])

SIZES = [20, 50, 100, 200, 500, 1000, 2000, 5000, 10000]

QUANTILES = {
    20: np.array([np.float64(0.286461), np.float64(0.298684), np.float64(0.310626), np.float64(0.3281), np.float64(0.344051), np.float64(0.363038), np.float64(0.376938), np.float64(0.387352), np.float64(0.396378), np.float64(0.40428), np.float64(0.411408), np.float64(0.417696), np.float64(0.423407), np.float64(0.428625), np.float64(0.433927), np.float64(0.438725), np.float64(0.443288), np.float64(0.448047), np.float64(0.452544), np.float64(0.456742), np.float64(0.461052), np.float64(0.464984), np.float64(0.46894), np.float64(0.47273), np.float64(0.476516), np.float64(0.480409), np.float64(0.484185), np.float64(0.487923), np.float64(0.491681), np.float64(0.495554), np.float64(0.499228), np.float64(0.502701), np.float64(0.506111), np.float64(0.509579), np.float64(0.512997), np.float64(0.51656), np.float64(0.519991), np.float64(0.52342), np.float64(0.526913), np.float64(0.530476), np.float64(0.533887), np.float64(0.537323), np.float64(0.540831), np.float64(0.544201), np.float64(0.54764), np.float64(0.551194), np.float64(0.554538), np.float64(0.557919), np.float64(0.561337), np.float64(0.564776), np.float64(0.568315), np.float64(0.57187), np.float64(0.57526), np.float64(0.57869), np.float64(0.582254), np.float64(0.585913), np.float64(0.589474), np.float64(0.593095), np.float64(0.596485), np.float64(0.599987), np.float64(0.603821), np.float64(0.607711), np.float64(0.611529), np.float64(0.615307), np.float64(0.619134), np.float64(0.622858), np.float64(0.626644), np.float64(0.630635), np.float64(0.634991), np.float64(0.639331), np.float64(0.643406), np.float64(0.647892), np.float64(0.652448), np.float64(0.656851), np.float64(0.661193), np.float64(0.665842), np.float64(0.670607), np.float64(0.675469), np.float64(0.680802), np.float64(0.68631), np.float64(0.691539), np.float64(0.69713), np.float64(0.702886), np.float64(0.70909), np.float64(0.715218), np.float64(0.721689), np.float64(0.728297), np.float64(0.735237), np.float64(0.742409), np.float64(0.750412), np.float64(0.758769), np.float64(0.767966), np.float64(0.77799), np.float64(0.787985), np.float64(0.798431), np.float64(0.810997), np.float64(0.824223), np.float64(0.839375), np.float64(0.857359), np.float64(0.878256), np.float64(0.90548), np.float64(0.941843), np.float64(1.000939), np.float64(1.053484), np.float64(1.116271), np.float64(1.156457), np.float64(1.199559)]),
    50: np.array([np.float64(0.296533), np.float64(0.305174), np.float64(0.3165), np.float64(0.337083), np.float64(0.353235), np.float64(0.374177), np.float64(0.388065), np.float64(0.398625), np.float64(0.407595), np.float64(0.41576), np.float64(0.423047), np.float64(0.429779), np.float64(0.43596), np.float64(0.441726), np.float64(0.447236), np.float64(0.452461), np.float64(0.457396), np.float64(0.462028), np.float64(0.466479), np.float64(0.470959), np.float64(0.475352), np.float64(0.479466), np.float64(0.483437), np.float64(0.487261), np.float64(0.491207), np.float64(0.495181), np.float64(0.49882), np.float64(0.502323), np.float64(0.505825), np.float64(0.509559), np.float64(0.51319), np.float64(0.516807), np.float64(0.520337), np.float64(0.523815), np.float64(0.527469), np.float64(0.531126), np.float64(0.534644), np.float64(0.53825), np.float64(0.541813), np.float64(0.545216), np.float64(0.548763), np.float64(0.552206), np.float64(0.555564), np.float64(0.559156), np.float64(0.562468), np.float64(0.565815), np.float64(0.569296), np.float64(0.572869), np.float64(0.576475), np.float64(0.58), np.float64(0.583509), np.float64(0.586915), np.float64(0.590367), np.float64(0.593854), np.float64(0.597335), np.float64(0.60088), np.float64(0.604389), np.float64(0.608127), np.float64(0.612048), np.float64(0.615769), np.float64(0.619635), np.float64(0.623331), np.float64(0.627158), np.float64(0.631019), np.float64(0.634982), np.float64(0.639012), np.float64(0.643127), np.float64(0.647121), np.float64(0.651372), np.float64(0.655617), np.float64(0.659965), np.float64(0.664792), np.float64(0.669289), np.float64(0.673848), np.float64(0.678845), np.float64(0.683604), np.float64(0.688628), np.float64(0.693704), np.float64(0.698822), np.float64(0.703874), np.float64(0.709287), np.float64(0.714946), np.float64(0.720825), np.float64(0.726912), np.float64(0.733594), np.float64(0.74036), np.float64(0.747237), np.float64(0.754429), np.float64(0.762119), np.float64(0.770088), np.float64(0.778572), np.float64(0.787415), np.float64(0.796525), np.float64(0.80718), np.float64(0.819381), np.float64(0.832143), np.float64(0.845721), np.float64(0.861083), np.float64(0.879074), np.float64(0.900825), np.float64(0.926003), np.float64(0.962285), np.float64(1.022942), np.float64(1.081435), np.float64(1.154314), np.float64(1.204645), np.float64(1.248541)]),
    100: np.array([np.float64(0.304211), np.float64(0.314716), np.float64(0.325238), np.float64(0.343167), np.float64(0.359721), np.float64(0.380259), np.float64(0.393444), np.float64(0.404205), np.float64(0.413513), np.float64(0.421562), np.float64(0.428982), np.float64(0.435256), np.float64(0.441511), np.float64(0.447231), np.float64(0.452426), np.float64(0.457917), np.float64(0.4632), np.float64(0.468245), np.float64(0.472851), np.float64(0.477247), np.float64(0.481598), np.float64(0.486132), np.float64(0.490108), np.float64(0.494173), np.float64(0.498096), np.float64(0.502115), np.float64(0.505989), np.float64(0.509973), np.float64(0.513781), np.float64(0.517672), np.float64(0.521355), np.float64(0.525091), np.float64(0.528679), np.float64(0.532136), np.float64(0.535855), np.float64(0.539275), np.float64(0.542696), np.float64(0.54628), np.float64(0.549601), np.float64(0.553135), np.float64(0.556467), np.float64(0.560018), np.float64(0.563453), np.float64(0.566864), np.float64(0.570409), np.float64(0.573887), np.float64(0.577181), np.float64(0.580674), np.float64(0.584218), np.float64(0.587559), np.float64(0.590921), np.float64(0.594534), np.float64(0.598088), np.float64(0.601659), np.float64(0.605132), np.float64(0.608995), np.float64(0.612784), np.float64(0.616356), np.float64(0.620079), np.float64(0.623815), np.float64(0.627684), np.float64(0.631474), np.float64(0.635409), np.float64(0.639371), np.float64(0.643454), np.float64(0.6473), np.float64(0.65142), np.float64(0.655759), np.float64(0.660064), np.float64(0.66425), np.float64(0.668683), np.float64(0.673058), np.float64(0.677601), np.float64(0.68218), np.float64(0.686782), np.float64(0.691599), np.float64(0.696479), np.float64(0.701408), np.float64(0.706658), np.float64(0.711857), np.float64(0.717216), np.float64(0.722893), np.float64(0.729101), np.float64(0.735254), np.float64(0.741793), np.float64(0.748169), np.float64(0.754956), np.float64(0.762025), np.float64(0.769738), np.float64(0.777927), np.float64(0.786888), np.float64(0.795735), np.float64(0.805233), np.float64(0.815815), np.float64(0.826927), np.float64(0.839365), np.float64(0.853316), np.float64(0.869907), np.float64(0.888947), np.float64(0.910511), np.float64(0.938399), np.float64(0.975518), np.float64(1.036825), np.float64(1.091429), np.float64(1.160914), np.float64(1.214211), np.float64(1.255956)]),
    200: np.array([np.float64(0.30786), np.float64(0.317948), np.float64(0.33079), np.float64(0.349408), np.float64(0.365347), np.float64(0.385026), np.float64(0.398396), np.float64(0.40865), np.float64(0.417645), np.float64(0.426264), np.float64(0.433267), np.float64(0.439935), np.float64(0.44625), np.float64(0.452205), np.float64(0.457592), np.float64(0.462755), np.float64(0.467779), np.float64(0.472581), np.float64(0.477172), np.float64(0.481754), np.float64(0.485961), np.float64(0.490117), np.float64(0.494386), np.float64(0.498278), np.float64(0.50247), np.float64(0.50644), np.float64(0.510145), np.float64(0.513732), np.float64(0.517475), np.float64(0.521214), np.float64(0.524789), np.float64(0.528717), np.float64(0.532268), np.float64(0.535765), np.float64(0.539406), np.float64(0.543224), np.float64(0.546786), np.float64(0.550045), np.float64(0.553461), np.float64(0.55684), np.float64(0.56048), np.float64(0.563754), np.float64(0.56708), np.float64(0.570646), np.float64(0.574222), np.float64(0.577757), np.float64(0.581299), np.float64(0.584663), np.float64(0.588108), np.float64(0.591565), np.float64(0.595132), np.float64(0.598699), np.float64(0.602289), np.float64(0.605884), np.float64(0.609592), np.float64(0.613202), np.float64(0.616654), np.float64(0.620328), np.float64(0.624033), np.float64(0.627749), np.float64(0.631627), np.float64(0.635497), np.float64(0.639473), np.float64(0.643445), np.float64(0.647433), np.float64(0.651685), np.float64(0.655966), np.float64(0.660329), np.float64(0.664714), np.float64(0.668963), np.float64(0.673554), np.float64(0.678117), np.float64(0.682443), np.float64(0.686977), np.float64(0.691886), np.float64(0.696536), np.float64(0.701802), np.float64(0.706913), np.float64(0.711835), np.float64(0.717448), np.float64(0.723176), np.float64(0.728857), np.float64(0.734976), np.float64(0.741098), np.float64(0.747234), np.float64(0.753689), np.float64(0.760604), np.float64(0.767505), np.float64(0.774973), np.float64(0.783211), np.float64(0.791622), np.float64(0.800763), np.float64(0.810913), np.float64(0.821791), np.float64(0.833369), np.float64(0.845643), np.float64(0.859719), np.float64(0.875625), np.float64(0.894295), np.float64(0.915063), np.float64(0.941942), np.float64(0.980523), np.float64(1.042969), np.float64(1.100958), np.float64(1.175228), np.float64(1.224825), np.float64(1.272514)]),
    500: np.array([np.float64(0.310436), np.float64(0.321294), np.float64(0.33281), np.float64(0.35228), np.float64(0.368921), np.float64(0.38884), np.float64(0.403011), np.float64(0.413993), np.float64(0.423012), np.float64(0.431237), np.float64(0.438353), np.float64(0.444926), np.float64(0.451077), np.float64(0.456876), np.float64(0.462391), np.float64(0.467671), np.float64(0.472804), np.float64(0.477659), np.float64(0.481949), np.float64(0.486363), np.float64(0.490643), np.float64(0.494809), np.float64(0.498879), np.float64(0.50283), np.float64(0.506889), np.float64(0.510891), np.float64(0.514666), np.float64(0.518338), np.float64(0.52223), np.float64(0.525814), np.float64(0.529423), np.float64(0.532947), np.float64(0.536795), np.float64(0.540378), np.float64(0.54395), np.float64(0.547529), np.float64(0.550854), np.float64(0.554567), np.float64(0.557902), np.float64(0.561391), np.float64(0.564683), np.float64(0.568119), np.float64(0.571588), np.float64(0.575052), np.float64(0.578586), np.float64(0.582219), np.float64(0.585772), np.float64(0.589339), np.float64(0.592707), np.float64(0.596213), np.float64(0.599652), np.float64(0.603476), np.float64(0.607025), np.float64(0.610653), np.float64(0.614238), np.float64(0.617763), np.float64(0.621581), np.float64(0.625266), np.float64(0.628902), np.float64(0.632664), np.float64(0.636457), np.float64(0.640333), np.float64(0.644286), np.float64(0.648168), np.float64(0.65192), np.float64(0.656028), np.float64(0.660267), np.float64(0.664353), np.float64(0.668605), np.float64(0.673034), np.float64(0.67767), np.float64(0.682293), np.float64(0.686902), np.float64(0.691373), np.float64(0.695912), np.float64(0.700808), np.float64(0.70588), np.float64(0.711207), np.float64(0.716462), np.float64(0.721983), np.float64(0.727659), np.float64(0.733294), np.float64(0.73945), np.float64(0.74545), np.float64(0.751723), np.float64(0.758542), np.float64(0.765173), np.float64(0.77251), np.float64(0.780246), np.float64(0.788442), np.float64(0.796891), np.float64(0.806079), np.float64(0.815866), np.float64(0.826092), np.float64(0.837791), np.float64(0.85057), np.float64(0.864586), np.float64(0.880373), np.float64(0.899241), np.float64(0.921407), np.float64(0.949794), np.float64(0.98631), np.float64(1.049794), np.float64(1.108358), np.float64(1.190121), np.float64(1.245107), np.float64(1.296841)]),
    1000: np.array([np.float64(0.314469), np.float64(0.325702), np.float64(0.339561), np.float64(0.356096), np.float64(0.371956), np.float64(0.391897), np.float64(0.405469), np.float64(0.416753), np.float64(0.425877), np.float64(0.433794), np.float64(0.440754), np.float64(0.447227), np.float64(0.453389), np.float64(0.458995), np.float64(0.464469), np.float64(0.469649), np.float64(0.474993), np.float64(0.479837), np.float64(0.484365), np.float64(0.488834), np.float64(0.49323), np.float64(0.497638), np.float64(0.501785), np.float64(0.505917), np.float64(0.509793), np.float64(0.513702), np.float64(0.517769), np.float64(0.521735), np.float64(0.525572), np.float64(0.529399), np.float64(0.53301), np.float64(0.536673), np.float64(0.540015), np.float64(0.543601), np.float64(0.54694), np.float64(0.550395), np.float64(0.553862), np.float64(0.557516), np.float64(0.560866), np.float64(0.564421), np.float64(0.567818), np.float64(0.571548), np.float64(0.57508), np.float64(0.578399), np.float64(0.581807), np.float64(0.585065), np.float64(0.588479), np.float64(0.592123), np.float64(0.59566), np.float64(0.599297), np.float64(0.602766), np.float64(0.606396), np.float64(0.609796), np.float64(0.613355), np.float64(0.616827), np.float64(0.620382), np.float64(0.623989), np.float64(0.627795), np.float64(0.631525), np.float64(0.635332), np.float64(0.639028), np.float64(0.642862), np.float64(0.646659), np.float64(0.650865), np.float64(0.654861), np.float64(0.659016), np.float64(0.663154), np.float64(0.667553), np.float64(0.67205), np.float64(0.676273), np.float64(0.680364), np.float64(0.68479), np.float64(0.68946), np.float64(0.69407), np.float64(0.698948), np.float64(0.704039), np.float64(0.708965), np.float64(0.714146), np.float64(0.719251), np.float64(0.72501), np.float64(0.730772), np.float64(0.736595), np.float64(0.742371), np.float64(0.748666), np.float64(0.755284), np.float64(0.761718), np.float64(0.768549), np.float64(0.775812), np.float64(0.783557), np.float64(0.791598), np.float64(0.799898), np.float64(0.809849), np.float64(0.819921), np.float64(0.830786), np.float64(0.841421), np.float64(0.854415), np.float64(0.868169), np.float64(0.884936), np.float64(0.90356), np.float64(0.925868), np.float64(0.953292), np.float64(0.990356), np.float64(1.051629), np.float64(1.108231), np.float64(1.173806), np.float64(1.217542), np.float64(1.263918)]),
    2000: np.array([np.float64(0.315503), np.float64(0.325039), np.float64(0.335507), np.float64(0.355753), np.float64(0.372849), np.float64(0.392098), np.float64(0.405862), np.float64(0.416799), np.float64(0.425714), np.float64(0.434057), np.float64(0.441184), np.float64(0.447939), np.float64(0.454192), np.float64(0.459984), np.float64(0.465762), np.float64(0.471193), np.float64(0.47611), np.float64(0.480864), np.float64(0.485371), np.float64(0.490024), np.float64(0.494415), np.float64(0.498587), np.float64(0.502642), np.float64(0.506432), np.float64(0.510491), np.float64(0.514332), np.float64(0.518165), np.float64(0.521957), np.float64(0.525761), np.float64(0.529471), np.float64(0.533158), np.float64(0.536604), np.float64(0.540196), np.float64(0.543718), np.float64(0.547348), np.float64(0.55117), np.float64(0.554681), np.float64(0.558165), np.float64(0.561597), np.float64(0.564959), np.float64(0.568362), np.float64(0.57171), np.float64(0.575054), np.float64(0.578515), np.float64(0.582054), np.float64(0.585475), np.float64(0.589019), np.float64(0.592551), np.float64(0.596113), np.float64(0.599609), np.float64(0.603296), np.float64(0.606788), np.float64(0.610417), np.float64(0.61383), np.float64(0.617468), np.float64(0.621326), np.float64(0.62492), np.float64(0.628664), np.float64(0.632466), np.float64(0.636313), np.float64(0.640116), np.float64(0.644054), np.float64(0.647966), np.float64(0.65183), np.float64(0.655836), np.float64(0.659829), np.float64(0.664078), np.float64(0.668355), np.float64(0.67259), np.float64(0.676734), np.float64(0.681316), np.float64(0.68569), np.float64(0.690506), np.float64(0.695031), np.float64(0.700004), np.float64(0.704797), np.float64(0.710082), np.float64(0.715243), np.float64(0.720372), np.float64(0.725972), np.float64(0.731543), np.float64(0.737405), np.float64(0.743352), np.float64(0.749762), np.float64(0.755788), np.float64(0.762656), np.float64(0.769535), np.float64(0.776526), np.float64(0.784708), np.float64(0.793123), np.float64(0.801537), np.float64(0.810742), np.float64(0.820687), np.float64(0.831237), np.float64(0.843072), np.float64(0.855723), np.float64(0.87007), np.float64(0.88579), np.float64(0.903333), np.float64(0.925988), np.float64(0.952909), np.float64(0.989033), np.float64(1.052173), np.float64(1.108036), np.float64(1.180961), np.float64(1.233999), np.float64(1.288719)]),
    5000: np.array([np.float64(0.318561), np.float64(0.326703), np.float64(0.34067), np.float64(0.359192), np.float64(0.375296), np.float64(0.395789), np.float64(0.409694), np.float64(0.420934), np.float64(0.430277), np.float64(0.438222), np.float64(0.445152), np.float64(0.451525), np.float64(0.457484), np.float64(0.463007), np.float64(0.468394), np.float64(0.473439), np.float64(0.478373), np.float64(0.483237), np.float64(0.487878), np.float64(0.492432), np.float64(0.49683), np.float64(0.50111), np.float64(0.50527), np.float64(0.509445), np.float64(0.513392), np.float64(0.517292), np.float64(0.521094), np.float64(0.524801), np.float64(0.528561), np.float64(0.532308), np.float64(0.53571), np.float64(0.539123), np.float64(0.542655), np.float64(0.546193), np.float64(0.549716), np.float64(0.553378), np.float64(0.556999), np.float64(0.560423), np.float64(0.563763), np.float64(0.567311), np.float64(0.570821), np.float64(0.574421), np.float64(0.577791), np.float64(0.581373), np.float64(0.58475), np.float64(0.588306), np.float64(0.591754), np.float64(0.595338), np.float64(0.598829), np.float64(0.602318), np.float64(0.605859), np.float64(0.609338), np.float64(0.612989), np.float64(0.61672), np.float64(0.620414), np.float64(0.624037), np.float64(0.627824), np.float64(0.631465), np.float64(0.635213), np.float64(0.639139), np.float64(0.643061), np.float64(0.64665), np.float64(0.650482), np.float64(0.654351), np.float64(0.658244), np.float64(0.662354), np.float64(0.666661), np.float64(0.670877), np.float64(0.67497), np.float64(0.679351), np.float64(0.683784), np.float64(0.68833), np.float64(0.693062), np.float64(0.69789), np.float64(0.702573), np.float64(0.707335), np.float64(0.712165), np.float64(0.717304), np.float64(0.722417), np.float64(0.727875), np.float64(0.733781), np.float64(0.739435), np.float64(0.745441), np.float64(0.751557), np.float64(0.75809), np.float64(0.765051), np.float64(0.771674), np.float64(0.779408), np.float64(0.787056), np.float64(0.795296), np.float64(0.803755), np.float64(0.813365), np.float64(0.82345), np.float64(0.833867), np.float64(0.845116), np.float64(0.857406), np.float64(0.871533), np.float64(0.888279), np.float64(0.907373), np.float64(0.929457), np.float64(0.958732), np.float64(0.996967), np.float64(1.058886), np.float64(1.118641), np.float64(1.194599), np.float64(1.24123), np.float64(1.28552)]),
    10000: np.array([np.float64(0.315586), np.float64(0.326327), np.float64(0.338442), np.float64(0.357472), np.float64(0.374098), np.float64(0.394552), np.float64(0.408325), np.float64(0.418572), np.float64(0.427867), np.float64(0.436003), np.float64(0.443349), np.float64(0.450012), np.float64(0.456202), np.float64(0.461785), np.float64(0.467262), np.float64(0.472567), np.float64(0.477779), np.float64(0.482527), np.float64(0.487212), np.float64(0.491508), np.float64(0.495787), np.float64(0.500084), np.float64(0.504311), np.float64(0.508351), np.float64(0.512577), np.float64(0.516531), np.float64(0.520514), np.float64(0.524309), np.float64(0.527908), np.float64(0.531848), np.float64(0.535397), np.float64(0.538997), np.float64(0.542498), np.float64(0.545933), np.float64(0.549515), np.float64(0.552851), np.float64(0.556535), np.float64(0.560026), np.float64(0.563343), np.float64(0.566805), np.float64(0.570423), np.float64(0.573857), np.float64(0.577366), np.float64(0.580701), np.float64(0.584103), np.float64(0.587618), np.float64(0.59108), np.float64(0.59459), np.float64(0.59815), np.float64(0.601531), np.float64(0.604977), np.float64(0.608495), np.float64(0.612157), np.float64(0.61575), np.float64(0.619265), np.float64(0.622905), np.float64(0.626645), np.float64(0.630386), np.float64(0.634312), np.float64(0.638171), np.float64(0.64215), np.float64(0.645973), np.float64(0.650046), np.float64(0.65398), np.float64(0.65806), np.float64(0.662112), np.float64(0.666365), np.float64(0.670548), np.float64(0.675184), np.float64(0.679697), np.float64(0.684208), np.float64(0.68866), np.float64(0.693262), np.float64(0.697942), np.float64(0.702791), np.float64(0.70776), np.float64(0.713074), np.float64(0.718118), np.float64(0.72337), np.float64(0.728592), np.float64(0.73403), np.float64(0.739464), np.float64(0.745755), np.float64(0.752455), np.float64(0.758643), np.float64(0.765171), np.float64(0.771935), np.float64(0.779271), np.float64(0.786546), np.float64(0.79496), np.float64(0.803695), np.float64(0.812761), np.float64(0.823047), np.float64(0.833609), np.float64(0.84537), np.float64(0.858713), np.float64(0.87338), np.float64(0.88921), np.float64(0.908013), np.float64(0.930589), np.float64(0.959263), np.float64(0.997455), np.float64(1.055574), np.float64(1.112828), np.float64(1.183798), np.float64(1.246647), np.float64(1.303029)]),
}
