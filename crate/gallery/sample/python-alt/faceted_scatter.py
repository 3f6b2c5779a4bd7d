import altair as alt

cars = "data/cars.csv"

alt.Chart(cars).mark_point().encode(
    x="horsepower:Q",
    y="mpg:Q",
    facet=alt.Facet("origin:N", columns=3),
)
