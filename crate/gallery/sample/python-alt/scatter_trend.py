import altair as alt

cars = "data/cars.csv"

points = alt.Chart(cars).mark_point(opacity=0.5).encode(
    x="horsepower:Q",
    y="mpg:Q",
)
trend = points.transform_regression("horsepower", "mpg").mark_line(color="firebrick")
points + trend
