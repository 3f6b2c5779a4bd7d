import altair as alt

cars = "data/cars.csv"

alt.Chart(cars).mark_point().encode(
    x="horsepower:Q",
    y="mpg:Q",
    size="weight:Q",
    color="origin:N",
)
