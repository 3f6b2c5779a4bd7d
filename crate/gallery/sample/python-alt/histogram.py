import altair as alt

cars = "data/cars.csv"

alt.Chart(cars).mark_bar().encode(
    x=alt.X("mpg:Q", bin=alt.Bin(maxbins=20)),
    y="count():Q",
)
